"""``matroid-hopf`` command line.

Exit codes: 0 success/pass, 1 identity failure or algorithm disagreement,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Optional

from . import hopf, tutte
from .matroid import MAX_ENUMERATE, Matroid, MatroidError, canonical, dual, enumerate_matroids
from .poly import S
from .textformat import format_matroid, read_matroid

log = logging.getLogger("matroid_hopf")


@dataclass
class VerificationReport:
    identity: str
    nmax: int
    checked: int
    passed: bool
    counterexample: Optional[dict] = None

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.identity} nmax={self.nmax} checked={self.checked}"
        if self.counterexample:
            ce = self.counterexample
            out += "\ncounterexample:\n" + ce["matroid"]
            out += f"lhs: {ce['lhs']}\nrhs: {ce['rhs']}"
        return out


def _counter_text(counter) -> str:
    return "; ".join(f"{c}·" + "⊗".join(f"[{k}]" for k in key) for key, c in sorted(counter.items()))


class _Rendered:
    """Comparison wrapper that prints a collected tensor as text."""

    def __init__(self, value, text):
        self.value, self._text = value, text

    def __eq__(self, other):
        return self.value == other.value

    def __str__(self):
        return self._text


def _coassoc_sides(m: Matroid):
    left, right = hopf.coassociativity_sides(m)
    return _Rendered(left, _counter_text(left)), _Rendered(right, _counter_text(right))


def _phi_sides(m: Matroid):
    fs = hopf.FormalSum.of(m)
    lhs = hopf.coproduct_formal(hopf.phi(fs))
    rhs = hopf.phi_tensor(hopf.coproduct_formal(fs))

    def render(d):
        return _Rendered(d, "; ".join(f"({v})·[{k1}]⊗[{k2}]" for (k1, k2), v in sorted(d.items())))

    return render(lhs), render(rhs)


_LEMMA41 = hopf.lemma41_character()


def _lemma41_sides(m: Matroid):
    from .poly import A, B

    return _LEMMA41(m), A**m.rank * B**m.nullity


# identity -> (sides function, default bound)
IDENTITIES: dict[str, tuple[Callable[[Matroid], tuple], int]] = {
    "duality": (lambda m: (tutte.tutte_subset(m).swap_xy(), tutte.tutte_subset(dual(m))), 5),
    "kook": (lambda m: (tutte.tutte_subset(m), hopf.kook_rhs(m)), 5),
    "alpha-tutte": (lambda m: (hopf.alpha(m), S**m.size * tutte.tutte_subset(m)), 5),
    "flow-alpha": (hopf.flow_alpha_sides, 4),
    "flow-beta": (hopf.flow_beta_sides, 4),
    "recipe": (lambda m: (tutte.recipe_Q(m), tutte.scaled_tutte(m)), 5),
    "coassoc": (_coassoc_sides, 4),
    "phi": (_phi_sides, 4),
    "lemma41": (_lemma41_sides, 5),
    "four-factor": (lambda m: (hopf.four_factor_alpha(m), hopf.alpha(m)), 4),
}


def verify(identity: str, nmax: int, extended: bool = False) -> VerificationReport:
    if identity not in IDENTITIES:
        raise KeyError(identity)
    sides, bound = IDENTITIES[identity]
    limit = MAX_ENUMERATE if extended else bound
    if not 0 <= nmax <= limit:
        raise ValueError(f"nmax for '{identity}' must be in 0..{limit}" + ("" if extended else " (use --extended for larger)"))
    checked = 0
    for n in range(nmax + 1):
        for m in enumerate_matroids(n):
            lhs, rhs = sides(m)
            checked += 1
            if lhs != rhs:
                ce = {"matroid": format_matroid(m), "lhs": str(lhs), "rhs": str(rhs)}
                return VerificationReport(identity, nmax, checked, False, ce)
        log.debug("%s: n=%d done, %d checked", identity, n, checked)
    return VerificationReport(identity, nmax, checked, True)


def _load(path: str) -> Matroid:
    return read_matroid(path)


def cmd_tutte(args) -> int:
    m = _load(args.file)
    if args.algorithm == "subset":
        print(tutte.tutte_subset(m))
        return 0
    if args.algorithm == "delcon":
        print(tutte.tutte_delcon(m))
        return 0
    p, q = tutte.tutte_subset(m), tutte.tutte_delcon(m)
    if p != q:
        print(f"error: algorithms disagree: subset={p} delcon={q}", file=sys.stderr)
        return 1
    print(p)
    return 0


def cmd_coproduct(args) -> int:
    m = _load(args.file)
    for line in hopf.coproduct(m).lines():
        print(line)
    return 0


def cmd_verify(args) -> int:
    try:
        report = verify(args.identity, args.nmax, args.extended)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(asdict(report), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(report.text())
    return 0 if report.passed else 1


def cmd_catalog(args) -> int:
    if not 0 <= args.n <= MAX_ENUMERATE:
        print(f"error: n must be in 0..{MAX_ENUMERATE}", file=sys.stderr)
        return 2
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = ["file\tisokey\trank\tnullity\tclass"]
    for i, m in enumerate(enumerate_matroids(args.n)):
        name = f"n{args.n}_{i:04d}.txt"
        (out / name).write_text(format_matroid(m), encoding="utf-8")
        key = canonical(m)
        rows.append(f"{name}\t{key.encode().hex()}\t{m.rank}\t{m.nullity}\t{key}")
    (out / "index.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote {len(rows) - 1} matroids to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroid-hopf", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", help="Tutte polynomial of a matroid file")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=("subset", "delcon", "both"), default="subset")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("coproduct", help="collected coproduct of a matroid file")
    p.add_argument("file")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("verify", help="check an identity over the small-matroid catalog")
    p.add_argument("identity", choices=sorted(IDENTITIES))
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--extended", action="store_true", help=f"allow nmax up to {MAX_ENUMERATE}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="write every labeled matroid on n elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (MatroidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
