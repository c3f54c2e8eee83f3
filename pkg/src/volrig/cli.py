"""Command line driver.

Every verdict line ends with the trial count and the arithmetic marker,
either the prime field used for randomized checks or `exact`/`QQ` for
deterministic ones.  With the same argv (seed included) the report is
byte-identical between runs.  Exit codes: 0 success, 1 a checked
property failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
from dataclasses import asdict
from math import comb

from .complexes import contract_edge
from .cycles import (GF2, contraction_reduce, cycle_space, is_minimal_cycle,
                     random_identity_sweep, verify_dataset)
from .errors import VolrigError
from .fileio import dataset_root, load_dataset, read_complex, write_complex
from .linalg import PRIME_TABLE, QQ, PrimeField
from .rigidity import generic_rank, rational_rank
from .shifting import (characteristic_membership, generic_basis,
                       shifted_level_stable, wedge_map_matrix)
from .sparsity import (SparsityParams, build_counterexample,
                       complete_to_sparse_basis, is_sparse, is_tight)

EXACT_SIZE_LIMIT = 24


def _suffix(arith: str, trials=None) -> str:
    if trials is None:
        return "(%s)" % arith
    return "(trials=%d, %s)" % (trials, arith)


def _face_str(face) -> str:
    return " ".join(str(v) for v in face)


def _payload(args, K, lines, obj):
    """Send the resulting complex to --out, or inline it into the report."""
    if getattr(args, "out", None):
        write_complex(K, args.out)
        lines.append("wrote %s" % args.out)
    else:
        lines.append("facets:")
        lines.extend(_face_str(f) for f in K.facets)
    obj["n"] = K.n
    obj["d"] = K.d
    obj["facets"] = [list(f) for f in K.facets]


def _exact_rank_line(K, args, lines, obj):
    """Rational cross-check on small instances under --exact."""
    if not args.exact:
        return None
    if (K.d - 1) * K.n > EXACT_SIZE_LIMIT:
        lines.append("exact-rank skipped (instance too large)")
        obj["exact_rank"] = None
        return None
    r = rational_rank(K, seed=args.seed)
    lines.append("exact-rank %d %s" % (r, _suffix("QQ")))
    obj["exact_rank"] = r
    return r


def _rank_common(args, field):
    K = read_complex(args.infile)
    rep = generic_rank(K, trials=args.trials, seed=args.seed, field=field)
    lines = ["n %d d %d facets %d" % (K.n, K.d, K.num_facets),
             "trial-ranks %s" % ",".join(str(r) for r in rep.trial_ranks),
             "rank %d target %d %s" % (rep.generic_rank, rep.target_rank,
                                       _suffix(rep.arithmetic, rep.trials))]
    obj = asdict(rep)
    obj["command"] = args.command
    best = rep.generic_rank
    exact = _exact_rank_line(K, args, lines, obj)
    if exact is not None and exact > best:
        best = exact
    return K, rep, best, lines, obj


def _cmd_rank(args, field):
    _, _, _, lines, obj = _rank_common(args, field)
    return 0, lines, obj


def _cmd_rigid(args, field):
    _, rep, best, lines, obj = _rank_common(args, field)
    rigid = best == rep.target_rank
    lines.append("%s %s" % ("RIGID" if rigid else "NOT-RIGID",
                            _suffix(rep.arithmetic, rep.trials)))
    obj["is_rigid"] = rigid
    return (0 if rigid else 1), lines, obj


def _cmd_shift(args, field):
    K = read_complex(args.infile)
    level = args.level if args.level is not None else K.d
    faces = shifted_level_stable(K, level, order=args.order,
                                 trials=args.trials, seed=args.seed,
                                 field=field)
    lines = ["level %d order %s count %d %s"
             % (level, args.order, len(faces),
                _suffix(field.describe(), args.trials))]
    lines.extend(_face_str(f) for f in faces)
    obj = {"command": "shift", "level": level, "order": args.order,
           "count": len(faces), "faces": [list(f) for f in faces],
           "trials": args.trials, "seed": args.seed,
           "arithmetic": field.describe()}
    return 0, lines, obj


def _cmd_sigma0(args, field):
    K = read_complex(args.infile)
    rep = characteristic_membership(K, trials=args.trials, seed=args.seed,
                                    field=field)
    lines = ["face %s" % _face_str(rep.face),
             "MEMBER %s %s" % ("yes" if rep.member else "no",
                               _suffix(rep.arithmetic, rep.trials))]
    obj = asdict(rep)
    obj["command"] = "sigma0"
    return (0 if rep.member else 1), lines, obj


def _cmd_psi(args, field):
    best = 0
    for t in range(args.trials):
        basis = generic_basis(args.n, seed=args.seed + t, field=field)
        best = max(best, wedge_map_matrix(basis, args.d).rank())
    rows = comb(args.n, args.d)
    cols = (args.d - 1) * args.n
    kernel = cols - best
    lines = ["d %d n %d rows %d cols %d" % (args.d, args.n, rows, cols),
             "rank %d kernel %d %s" % (best, kernel,
                                       _suffix(field.describe(), args.trials))]
    obj = {"command": "psi", "d": args.d, "n": args.n, "rows": rows,
           "cols": cols, "rank": best, "kernel": kernel,
           "trials": args.trials, "seed": args.seed,
           "arithmetic": field.describe()}
    return 0, lines, obj


def _params_for(args, K) -> SparsityParams:
    if (args.a is None) != (args.b is None):
        raise VolrigError("--a and --b must be given together")
    if args.a is None:
        return SparsityParams.volume_regime(K.d)
    return SparsityParams(a=args.a, b=args.b, d=K.d)


def _cmd_sparsity(args, field):
    K = read_complex(args.infile)
    params = _params_for(args, K)
    ok, witness = is_sparse(K, params)
    lines = ["params a %d b %d d %d" % (params.a, params.b, params.d),
             "SPARSE %s %s" % ("yes" if ok else "no", _suffix("exact"))]
    if witness is not None:
        lines.append("witness %s" % _face_str(witness))
    obj = {"command": "sparsity", "a": params.a, "b": params.b, "d": params.d,
           "sparse": ok, "witness": list(witness) if witness else None,
           "arithmetic": "exact"}
    return (0 if ok else 1), lines, obj


def _cmd_tight(args, field):
    K = read_complex(args.infile)
    params = _params_for(args, K)
    tight = is_tight(K, params)
    lines = ["params a %d b %d d %d" % (params.a, params.b, params.d),
             "facets %d bound %d" % (K.num_facets, params.bound(K.n)),
             "TIGHT %s %s" % ("yes" if tight else "no", _suffix("exact"))]
    obj = {"command": "tight", "a": params.a, "b": params.b, "d": params.d,
           "facets": K.num_facets, "bound": params.bound(K.n),
           "tight": tight, "arithmetic": "exact"}
    return (0 if tight else 1), lines, obj


def _cmd_complete_basis(args, field):
    K = read_complex(args.infile)
    params = _params_for(args, K)
    result = complete_to_sparse_basis(K, params)
    added = result.num_facets - K.num_facets
    lines = ["params a %d b %d d %d" % (params.a, params.b, params.d),
             "added %d" % added,
             "n %d d %d facets %d" % (result.n, result.d, result.num_facets)]
    obj = {"command": "complete-basis", "a": params.a, "b": params.b,
           "d": params.d, "added": added}
    _payload(args, result, lines, obj)
    return 0, lines, obj


def _cmd_counterexample(args, field):
    K = build_counterexample(args.d)
    params = SparsityParams.volume_regime(args.d)
    tight = is_tight(K, params)
    rep = generic_rank(K, trials=args.trials, seed=args.seed, field=field)
    mem = characteristic_membership(K, trials=args.trials, seed=args.seed,
                                    field=field)
    lines = ["n %d d %d facets %d" % (K.n, K.d, K.num_facets),
             "TIGHT %s %s" % ("yes" if tight else "no", _suffix("exact")),
             "RIGID %s %s" % ("yes" if rep.is_rigid else "no",
                              _suffix(rep.arithmetic, rep.trials)),
             "SIGMA0 %s %s" % ("yes" if mem.member else "no",
                               _suffix(mem.arithmetic, mem.trials))]
    obj = {"command": "counterexample", "n": K.n, "d": K.d,
           "num_facets": K.num_facets, "tight": tight,
           "is_rigid": rep.is_rigid, "rank": rep.generic_rank,
           "target": rep.target_rank, "member": mem.member,
           "trials": args.trials, "seed": args.seed,
           "arithmetic": rep.arithmetic}
    _payload(args, K, lines, obj)
    ok = tight and not rep.is_rigid and not mem.member
    return (0 if ok else 1), lines, obj


def _cmd_contract(args, field):
    K = read_complex(args.infile)
    if args.edge:
        parts = args.edge.split(",")
        if len(parts) != 2:
            raise VolrigError("--edge wants `u,w`")
        try:
            u, w = int(parts[0]), int(parts[1])
        except ValueError:
            raise VolrigError("--edge wants two integers")
        result = contract_edge(K, u, w)
        lines = ["contracted %d %d" % (u, w),
                 "n %d d %d facets %d" % (result.n, result.d,
                                          result.num_facets)]
        obj = {"command": "contract", "edge": [u, w]}
    else:
        result, log = contraction_reduce(K)
        lines = ["steps %d" % len(log),
                 "log %s" % ";".join("%d,%d" % e for e in log),
                 "n %d d %d facets %d" % (result.n, result.d,
                                          result.num_facets)]
        obj = {"command": "contract", "steps": len(log),
               "log": [list(e) for e in log]}
    _payload(args, result, lines, obj)
    return 0, lines, obj


def _cmd_homology(args, field):
    K = read_complex(args.infile)
    coeff = GF2 if args.mod2 else QQ
    space = cycle_space(K, coeff)
    minimal = is_minimal_cycle(K, coeff)
    arith = coeff.describe()
    lines = ["cycle-dim %d %s" % (space.ncols, _suffix(arith)),
             "MINIMAL-CYCLE %s %s" % ("yes" if minimal else "no",
                                      _suffix(arith))]
    obj = {"command": "homology", "cycle_dim": space.ncols,
           "minimal": minimal, "arithmetic": arith}
    return 0, lines, obj


def _cmd_boundary_id(args, field):
    failures = random_identity_sweep(args.samples, seed=args.seed,
                                     field=field)
    lines = ["samples %d failures %d" % (args.samples, failures),
             "IDENTITY %s %s" % ("yes" if failures == 0 else "no",
                                 _suffix(field.describe(), args.samples))]
    obj = {"command": "boundary-id", "samples": args.samples,
           "failures": failures, "seed": args.seed,
           "arithmetic": field.describe()}
    return (0 if failures == 0 else 1), lines, obj


def _cmd_verify_dataset(args, field):
    root = args.dir or dataset_root()
    if root is None:
        raise VolrigError("no dataset directory: set VOLRIG_DATA or pass --dir")
    path = root if args.name is None else os.path.join(root, args.name)
    ds = load_dataset(path, name=args.name)
    rep = verify_dataset(ds, trials=args.trials, seed=args.seed, field=field)
    lines = ["dataset %s size %d" % (rep.name, rep.size)]
    for e in rep.entries:
        lines.append("entry %d n %d facets %d rank %d target %d rigid %s "
                     "member %s irreducible %s"
                     % (e["index"], e["n"], e["facets"], e["rank"],
                        e["target"], "yes" if e["rigid"] else "no",
                        "-" if e["member"] is None else
                        ("yes" if e["member"] else "no"),
                        "yes" if e["irreducible"] else "no"))
    lines.append("rigid %d/%d %s" % (rep.rigid_count, rep.size,
                                     _suffix(rep.arithmetic, rep.trials)))
    ok = rep.all_rigid
    if args.expect is not None and rep.size != args.expect:
        lines.append("size-mismatch expected %d" % args.expect)
        ok = False
    lines.append("DATASET %s %s" % ("ok" if ok else "FAIL",
                                    _suffix(rep.arithmetic, rep.trials)))
    obj = asdict(rep)
    obj["command"] = "verify-dataset"
    obj["ok"] = ok
    return (0 if ok else 1), lines, obj


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trials", type=int, default=3,
                        help="independent random samples (default 3)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=0, metavar="INDEX",
                        help="index into the prime table (default 0)")
    common.add_argument("--json", action="store_true",
                        help="machine-readable report")
    common.add_argument("--exact", action="store_true",
                        help="rational cross-check where size permits")

    parser = argparse.ArgumentParser(
        prog="volrig",
        description="Exact volume-rigidity toolkit for simplicial complexes")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(handler=handler)
        return p

    p = add("rank", _cmd_rank, help="generic rank of the rigidity matrix")
    p.add_argument("--in", dest="infile", required=True)

    p = add("rigid", _cmd_rigid, help="assert generic volume rigidity")
    p.add_argument("--in", dest="infile", required=True)

    p = add("shift", _cmd_shift, help="members of the shifted family")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--order", choices=("p", "lex"), default="p")
    p.add_argument("--level", type=int, default=None,
                   help="face size (default: facet cardinality)")

    p = add("sigma0", _cmd_sigma0,
            help="membership of the characteristic face")
    p.add_argument("--in", dest="infile", required=True)

    p = add("psi", _cmd_psi, help="rank and kernel of the wedge map")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("sparsity", _cmd_sparsity, help="assert the sparsity counts")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)

    p = add("tight", _cmd_tight, help="assert sparsity with equality at V")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)

    p = add("complete-basis", _cmd_complete_basis,
            help="greedy completion to a sparsity basis")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--out", default=None)

    p = add("counterexample", _cmd_counterexample,
            help="tight but flexible complex for a given cardinality")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None)

    p = add("contract", _cmd_contract,
            help="contract one edge, or reduce to a fixed point")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--edge", default=None, metavar="U,W")
    p.add_argument("--out", default=None)

    p = add("homology", _cmd_homology,
            help="top cycle space and minimal-cycle flag")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--mod2", action="store_true",
                   help="coefficients mod 2 instead of rationals")

    p = add("boundary-id", _cmd_boundary_id,
            help="random sweep of the rigidity-boundary identity")
    p.add_argument("--samples", type=int, default=50)

    p = add("verify-dataset", _cmd_verify_dataset,
            help="check every complex of a dataset directory")
    p.add_argument("--name", default=None,
                   help="subdirectory under the dataset root")
    p.add_argument("--dir", default=None,
                   help="dataset root (overrides VOLRIG_DATA)")
    p.add_argument("--expect", type=int, default=None,
                   help="required number of dataset entries")

    return parser


def run_command(argv) -> tuple:
    """Dispatch argv; returns (exit code, full report text)."""
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
            args = parser.parse_args(argv)
    except SystemExit as e:
        code = 0 if e.code in (0, None) else 2
        return code, buf.getvalue()
    if args.prime < 0 or args.prime >= len(PRIME_TABLE):
        return 2, "error: prime index %d outside 0..%d\n" % (
            args.prime, len(PRIME_TABLE) - 1)
    field = PrimeField(PRIME_TABLE[args.prime])
    try:
        code, lines, obj = args.handler(args, field)
    except VolrigError as e:
        return 2, "error: %s\n" % e
    except OSError as e:
        return 2, "error: %s\n" % e
    if args.json:
        return code, json.dumps(obj, sort_keys=True) + "\n"
    return code, "\n".join(lines) + "\n"


def main(argv=None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
