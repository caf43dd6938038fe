"""Batch command-line surface for the twist engine.

Exit codes are a stable contract:
  0  success (or words indistinguishable on objects)
  1  a verified relation failed (implementation bug)
  2  usage / parse error
  3  the compared words act differently (distinct braids)
"""

import argparse
import json
import sys

from .algebra import ChainParams, ZigzagAlgebra
from .complexes import ProjComplex, homology_table
from .ktheory import (
    IntersectionLattice,
    build_tdiagram,
    definiteness,
    elliptic_word,
    euler_class,
    imat_identity,
    pl_reflection,
)
from .twists import apply_word, compare_words, parse_braid_word, verify_relations

EXIT_OK = 0
EXIT_RELATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_DISTINCT = 3


def _add_chain_args(p):
    p.add_argument("--n", type=int, default=2, help="number of chain objects")
    p.add_argument("--N", type=int, default=2, dest="sphdim",
                   help="spherical dimension (>= 2)")
    p.add_argument("--degrees", type=str, default=None,
                   help="comma-separated forward-arrow degrees (default: all 1)")
    p.add_argument("--field", type=str, default="Q",
                   help="Q (exact rationals, default) or a prime p for F_p")
    p.add_argument("--json", action="store_true", help="emit JSON output")


def _build_algebra(args):
    degrees = None
    if args.degrees:
        degrees = tuple(int(x) for x in args.degrees.split(","))
    char = None
    if args.field != "Q":
        char = int(args.field)
    params = ChainParams(args.n, args.sphdim, degrees)
    return ZigzagAlgebra(params, char=char)


def _emit(data, as_json, text_lines):
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _complex_lines(M):
    lines = []
    if M.is_zero():
        return ["  (zero complex)"]
    for t in M.degrees():
        names = ", ".join("P%d<%d>" % (v, s) for v, s in M.summands(t))
        lines.append("  degree %d: %s" % (t, names))
    return lines


def cmd_check_relations(args):
    algebra = _build_algebra(args)
    report = verify_relations(algebra)
    data = report.to_dict()
    lines = []
    for c in report.checks:
        lines.append(
            "%-28s on P%d: %s" % (c.relation, c.object_vertex,
                                  "ok" if c.passed else "FAILED")
        )
    lines.append("all relations hold" if report.all_passed else "RELATION FAILURE")
    _emit(data, args.json, lines)
    return EXIT_OK if report.all_passed else EXIT_RELATION_FAILURE


def cmd_act(args):
    algebra = _build_algebra(args)
    word = parse_braid_word(args.word, algebra.params.n)
    algebra.check_vertex(args.object)
    M = apply_word(word, ProjComplex.projective(algebra, args.object))
    euler = euler_class(M)
    table = homology_table(M)
    data = {
        "word": word,
        "object": args.object,
        "complex": M.to_dict(),
        "euler_class": [p.to_pairs() for p in euler],
        "homology_table": {
            str(i): {"%d,%d" % ts: d for ts, d in sorted(tab.items())}
            for i, tab in table.items()
        },
    }
    lines = ["word %s applied to P%d:" % (word, args.object)]
    lines += _complex_lines(M)
    lines.append("euler class: [%s]" % ", ".join(repr(p) for p in euler))
    for i, tab in sorted(table.items()):
        dims = ", ".join("(%d,%d): %d" % (t, s, d) for (t, s), d in sorted(tab.items()))
        lines.append("hom from P%d: {%s}" % (i, dims))
    _emit(data, args.json, lines)
    return EXIT_OK


def cmd_compare(args):
    algebra = _build_algebra(args)
    w1 = parse_braid_word(args.w1, algebra.params.n)
    w2 = parse_braid_word(args.w2, algebra.params.n)
    report = compare_words(w1, w2, algebra)
    lines = ["verdict: %s" % report.verdict]
    for k, res in sorted(report.per_vertex.items()):
        lines.append("  P%d: %s" % (k, res))
    if report.distinct:
        lines.append("witness: vertex %d, %s"
                     % (report.witness_vertex, report.witness_invariant))
    _emit(report.to_dict(), args.json, lines)
    return EXIT_DISTINCT if report.distinct else EXIT_OK


def cmd_lattice(args):
    if args.t:
        parts = [int(x) for x in args.t.split(",")]
        if len(parts) != 3:
            raise ValueError("--t expects three comma-separated integers")
        lattice = build_tdiagram(*parts)
    else:
        form = json.loads(args.matrix)
        lattice = IntersectionLattice(tuple(tuple(row) for row in form))
    report = definiteness(lattice)
    data = {"lattice": lattice.to_dict(), "definiteness": report.to_dict()}
    lines = [
        "rank: %d" % lattice.rank,
        "definiteness: %s" % report.verdict,
        "signature (pos, neg, zero): %s" % (report.signature,),
    ]
    if args.reflections:
        refls = []
        for k in range(lattice.rank):
            v = [1 if i == k else 0 for i in range(lattice.rank)]
            refls.append(pl_reflection(v, lattice))
        data["reflections"] = refls
        for k, mat in enumerate(refls):
            lines.append("reflection in node %d: %s" % (k + 1, mat))
    _emit(data, args.json, lines)
    return EXIT_OK


def cmd_elliptic(args):
    mat = elliptic_word(args.word)
    is_identity = mat == imat_identity(2)
    is_central = is_identity or mat == [[-1, 0], [0, -1]]
    data = {"word": args.word, "matrix": mat,
            "identity": is_identity, "central": is_central}
    lines = ["matrix: %s" % (mat,)]
    if is_identity:
        lines.append("word acts as the identity on (rank, degree) vectors")
    elif is_central:
        lines.append("word is central (acts as -identity)")
    _emit(data, args.json, lines)
    return EXIT_OK


def cmd_dump_algebra(args):
    algebra = _build_algebra(args)
    print(json.dumps(algebra.describe(), sort_keys=True, indent=2))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sphtwist",
        description="Braid group actions by spherical twists on complexes "
        "of graded projectives, with exact K-theory and lattice shadows. "
        "Default chain: n=2, N=2, degrees=1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-relations", help="verify inverse/braid/commutation "
                       "relations on the projective generators")
    _add_chain_args(p)
    p.set_defaults(func=cmd_check_relations)

    p = sub.add_parser("act", help="apply a braid word to a projective")
    _add_chain_args(p)
    p.add_argument("--word", type=str, required=True,
                   help='braid word, e.g. "1 2 -1"')
    p.add_argument("--object", type=int, default=1, help="vertex of the projective")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("compare", help="distinguish two braid words by their actions")
    _add_chain_args(p)
    p.add_argument("--w1", type=str, required=True)
    p.add_argument("--w2", type=str, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lattice", help="definiteness of a T(b1,b2,b3) or "
                       "explicit intersection lattice")
    p.add_argument("--t", type=str, default=None, help="triple b1,b2,b3 (each >= 2)")
    p.add_argument("--matrix", type=str, default=None,
                   help="symmetric integer matrix as JSON")
    p.add_argument("--reflections", action="store_true",
                   help="also print the nodal reflection matrices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("elliptic", help="matrix of a word in the elliptic "
                       "twists O, Op, L on (rank, degree) vectors")
    p.add_argument("--word", type=str, required=True,
                   help='e.g. "(O Op)^6" or "L^-1 O"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_elliptic)

    p = sub.add_parser("dump-algebra", help="JSON description of the chain algebra")
    _add_chain_args(p)
    p.set_defaults(func=cmd_dump_algebra)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lattice" and not (args.t or args.matrix):
        print("lattice: one of --t or --matrix is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
