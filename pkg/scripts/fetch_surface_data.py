#!/usr/bin/env python3
"""Fetch small closed-surface triangulations and convert them to the
complex file format, one dataset directory per surface.

The canonical source is the census of vertex-minimal surface
triangulations hosted on Frank Lutz's simplicial manifold pages
(https://page.math.tu-berlin.de/~lutz/stellar/).  Files there list each
triangulation as a bracketed facet list, e.g.

    manifold_lex_d2_n8_#4=[[1,2,3],[1,2,4],...,[6,7,8]]

This script accepts either a URL to such a page/file or a local
directory of already-downloaded files, converts every triangulation it
finds, and writes a manifest.txt with sha256 checksums so that
`volrig verify-dataset` and the test suite can consume the result.

Usage:
    python scripts/fetch_surface_data.py --dest ~/surface-data \\
        --name torus --source https://...            # download
    python scripts/fetch_surface_data.py --dest ~/surface-data \\
        --name rp2 --source ./downloads/rp2_raw.txt  # local file
    export VOLRIG_DATA=~/surface-data

Without --source the script tries the built-in URL for the given name;
when the network is unreachable it reports the failure and exits 1
without touching existing data.
"""

import argparse
import os
import re
import sys
import urllib.error
import urllib.request

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from volrig import build_complex
from volrig.fileio import format_complex, sha256_file, write_complex

PAGE = "https://page.math.tu-berlin.de/~lutz/stellar/"
DEFAULT_SOURCES = {
    "rp2": PAGE + "RP2.html",
    "torus": PAGE + "torus.html",
    "klein": PAGE + "klein_bottle.html",
}

FACET_LIST = re.compile(r"=\s*\[\s*(\[[0-9\s,\[\]]+\])\s*\]")
TRIPLE = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_triangulations(text):
    """Facet lists out of census markup, one per `name=[[...],...]`."""
    out = []
    for m in FACET_LIST.finditer(text):
        facets = [tuple(int(g) for g in t.groups())
                  for t in TRIPLE.finditer(m.group(1))]
        if facets:
            out.append(facets)
    return out


def read_source(source):
    if os.path.isdir(source):
        texts = []
        for fname in sorted(os.listdir(source)):
            path = os.path.join(source, fname)
            if os.path.isfile(path):
                with open(path, "r", encoding="utf-8",
                          errors="replace") as fh:
                    texts.append(fh.read())
        return "\n".join(texts)
    if os.path.isfile(source):
        with open(source, "r", encoding="utf-8", errors="replace") as fh:
            return fh.read()
    try:
        with urllib.request.urlopen(source, timeout=30) as resp:
            return resp.read().decode("utf-8", errors="replace")
    except (urllib.error.URLError, OSError) as e:
        raise SystemExit("could not fetch %s: %s\n"
                         "download the census file by hand and rerun with "
                         "--source <path>" % (source, e))


def convert(name, raw_text, dest):
    triangulations = parse_triangulations(raw_text)
    if not triangulations:
        raise SystemExit("no facet lists recognized in the %s source" % name)
    outdir = os.path.join(dest, name)
    os.makedirs(outdir, exist_ok=True)
    manifest = ["# surface: %s" % name,
                "# source: %s census" % PAGE,
                "# converted by scripts/fetch_surface_data.py"]
    for i, facets in enumerate(triangulations):
        n = max(v for f in facets for v in f)
        K = build_complex(n, facets)
        fname = "%s_%02d.txt" % (name, i)
        path = os.path.join(outdir, fname)
        write_complex(K, path)
        manifest.append("%s %d %d %s" % (fname, K.n, K.num_facets,
                                         sha256_file(path)))
    with open(os.path.join(outdir, "manifest.txt"), "w",
              encoding="ascii") as fh:
        fh.write("\n".join(manifest) + "\n")
    return len(triangulations), outdir


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--dest", required=True,
                    help="dataset root directory (becomes VOLRIG_DATA)")
    ap.add_argument("--name", required=True,
                    choices=sorted(DEFAULT_SOURCES),
                    help="which surface dataset to build")
    ap.add_argument("--source", default=None,
                    help="census URL, file, or directory "
                         "(default: built-in URL)")
    args = ap.parse_args(argv)
    source = args.source or DEFAULT_SOURCES[args.name]
    count, outdir = convert(args.name, read_source(source), args.dest)
    print("wrote %d complexes to %s" % (count, outdir))
    print("set VOLRIG_DATA=%s to enable the dataset checks"
          % os.path.abspath(args.dest))
    return 0


if __name__ == "__main__":
    sys.exit(main())
