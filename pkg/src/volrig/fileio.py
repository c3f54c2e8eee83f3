"""Complex file format and dataset loading.

Format: ASCII, LF line endings.  Line 1 holds `n d` (two base-10
integers separated by one space).  Every following non-empty line that
does not start with `#` carries exactly d vertex labels, space
separated.  A trailing newline is optional on read and always written.

A dataset directory holds one complex file per triangulation plus a
`manifest.txt` whose non-comment lines read
`filename vertex_count facet_count sha256`.
"""

from __future__ import annotations

import hashlib
import os

from .complexes import SimplicialComplex, build_complex
from .cycles import SurfaceDataset
from .errors import DatasetError, ParseError

ENV_DATA_DIR = "VOLRIG_DATA"


def parse_complex(text: str) -> SimplicialComplex:
    lines = text.split("\n")
    header = None
    header_line = 0
    facets = []
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("header needs exactly `n d`", no)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError("header entries must be integers", no)
            header_line = no
            continue
        if len(parts) != header[1]:
            raise ParseError("expected %d labels, found %d"
                             % (header[1], len(parts)), no)
        try:
            facets.append(tuple(int(x) for x in parts))
        except ValueError:
            raise ParseError("vertex labels must be integers", no)
    if header is None:
        raise ParseError("empty input, no header line")
    n, d = header
    if d < 1:
        raise ParseError("facet cardinality must be positive", header_line)
    return build_complex(n, facets)


def format_complex(K: SimplicialComplex) -> str:
    out = ["%d %d" % (K.n, K.d)]
    out.extend(" ".join(str(v) for v in f) for f in K.facets)
    return "\n".join(out) + "\n"


def read_complex(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="ascii") as fh:
        return parse_complex(fh.read())


def write_complex(K: SimplicialComplex, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_complex(K))


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            h.update(block)
    return h.hexdigest()


def parse_manifest(text: str) -> list:
    """[(filename, n, f, checksum)] in file order; `#` lines ignored."""
    entries = []
    for no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ParseError("manifest line needs `file n f sha256`", no)
        try:
            entries.append((parts[0], int(parts[1]), int(parts[2]),
                            parts[3].lower()))
        except ValueError:
            raise ParseError("manifest counts must be integers", no)
    return entries


def load_dataset(dirpath: str, name: str | None = None) -> SurfaceDataset:
    """Load and cross-check every complex a manifest promises."""
    manifest_path = os.path.join(dirpath, "manifest.txt")
    if not os.path.isfile(manifest_path):
        raise DatasetError("no manifest.txt in %s" % dirpath)
    with open(manifest_path, "r", encoding="ascii") as fh:
        manifest_text = fh.read()
    provenance = "\n".join(line.strip() for line in manifest_text.split("\n")
                           if line.strip().startswith("#"))
    complexes = []
    for fname, n, f, checksum in parse_manifest(manifest_text):
        path = os.path.join(dirpath, fname)
        if not os.path.isfile(path):
            raise DatasetError("missing dataset file %s" % fname)
        actual = sha256_file(path)
        if actual != checksum:
            raise DatasetError("checksum mismatch for %s: %s != %s"
                               % (fname, actual, checksum))
        K = read_complex(path)
        if K.n != n or K.num_facets != f:
            raise DatasetError("counts for %s disagree with manifest: "
                               "n=%d f=%d vs %d %d"
                               % (fname, K.n, K.num_facets, n, f))
        complexes.append(K)
    if not complexes:
        raise DatasetError("manifest lists no complexes")
    d = complexes[0].d
    if any(K.d != d for K in complexes):
        raise DatasetError("dataset mixes facet cardinalities")
    return SurfaceDataset(name=name or os.path.basename(os.path.normpath(dirpath)),
                          d=d, complexes=tuple(complexes),
                          provenance=provenance)


def dataset_root() -> str | None:
    """Directory the VOLRIG_DATA environment variable points at."""
    root = os.environ.get(ENV_DATA_DIR)
    if root and os.path.isdir(root):
        return root
    return None
