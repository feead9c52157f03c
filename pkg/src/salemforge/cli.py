"""Command-line entry point."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import acceptance, coxeter, geometry, gluing, rootloc
from .exactpoly import IntPoly

CSV_HEADER = ["l", "m", "n", "tau_lo", "tau_hi", "beta_lo", "beta_hi", "circle_pairs",
              "real_pairs", "irreducible", "salem_class", "q_coeffs"]


class UsageError(Exception):
    pass


class CensusError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# census


@dataclass
class CensusRow:
    l: int
    m: int
    n: int
    q_coeffs: list[int]
    tau_lo: str
    tau_hi: str
    beta_lo: str
    beta_hi: str
    circle_pairs: int
    real_pairs: int
    irreducible: bool | str
    salem_class: str

    def as_record(self) -> dict:
        return {
            "l": self.l, "m": self.m, "n": self.n,
            "tau_lo": self.tau_lo, "tau_hi": self.tau_hi,
            "beta_lo": self.beta_lo, "beta_hi": self.beta_hi,
            "circle_pairs": self.circle_pairs, "real_pairs": self.real_pairs,
            "irreducible": self.irreducible, "salem_class": self.salem_class,
            "q_coeffs": self.q_coeffs,
        }

    def csv_fields(self) -> list[str]:
        rec = self.as_record()
        out = []
        for k in CSV_HEADER:
            v = rec[k]
            if k == "q_coeffs":
                v = " ".join(map(str, v))
            elif isinstance(v, bool):
                v = "true" if v else "false"
            out.append(str(v))
        return out


def census_row(counts: tuple[int, int, int], check_irreducible: bool = True) -> CensusRow:
    l, m, n = counts
    _, Q = gluing.symbolic_pq()
    q = Q.specialize(l, m, n)
    prof = rootloc.root_profile(q)
    tau = rootloc.growth_rate(q)
    beta = rootloc.reciprocal_root(q, 1)
    if (prof.circle_pairs, prof.real_pairs) != (7, 2):
        raise CensusError(f"({l},{m},{n}): unexpected root profile {prof}")
    if not (4 * n + 5 < tau.lo < tau.hi < 4 * n + m + l + 6):
        raise CensusError(f"({l},{m},{n}): growth rate outside the expected window")
    if check_irreducible:
        irr: bool | str = rootloc.is_irreducible(q)
        kind = rootloc.classify_salem(q).kind.value
    else:
        irr, kind = "skipped", "skipped"
    return CensusRow(l, m, n, list(q.coeffs), tau.decimal_lo(), tau.decimal_hi(),
                     beta.decimal_lo(), beta.decimal_hi(), prof.circle_pairs, prof.real_pairs, irr, kind)


def _census_worker(args):
    counts, check = args
    return census_row(counts, check)


def worker_count() -> int:
    cap = os.environ.get("SALEMFORGE_WORKERS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            raise UsageError(f"SALEMFORGE_WORKERS={cap!r} is not an integer") from None
    return n


def run_census(n_max: int, check_irreducible: bool = True, workers: int | None = None):
    """Rows for every valid (l, m, n) with n <= n_max, ordered by (n, l, m)."""
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    triples = list(gluing.valid_counts(n_max))
    jobs = [(t, check_irreducible) for t in triples]
    workers = workers or worker_count()
    if workers <= 1 or len(jobs) < 8:
        yield from map(_census_worker, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order, which is already (n, l, m)
        yield from pool.map(_census_worker, jobs, chunksize=max(1, len(jobs) // (8 * workers)))


def write_census(rows, fmt: str, fh) -> int:
    count = 0
    if fmt == "csv":
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow(r.csv_fields())
            count += 1
    else:
        fh.write("[")
        for r in rows:
            fh.write(("," if count else "") + "\n  " + json.dumps(r.as_record()))
            count += 1
        fh.write("\n]\n")
    return count


# ---------------------------------------------------------------------------
# helpers


def _read_poly(path: str) -> IntPoly:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = " ".join(ln for ln in lines if ln)
    try:
        return IntPoly.from_text(body)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_graph(spec: str) -> coxeter.CoxeterGraph:
    if spec in coxeter.BUILTIN_NAMES:
        return coxeter.builtin_graph(spec)
    p = Path(spec)
    if not p.exists():
        raise UsageError(f"{spec} is neither a builtin graph ({', '.join(coxeter.BUILTIN_NAMES)}) nor a file")
    try:
        return coxeter.parse_graph(p.read_text(encoding="utf-8"))
    except ValueError as exc:
        raise UsageError(f"{spec}: {exc}") from None


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_growth(args) -> int:
    g = _load_graph(args.graph)
    f = coxeter.steinberg_growth(g)
    num, den = f.as_growth()
    rec = {"graph": args.graph, "generators": g.size,
           "numerator": num.to_text(), "denominator": den.to_text(),
           "numerator_pretty": str(num), "denominator_pretty": str(den),
           "series_prefix": coxeter.series_prefix(f, args.terms)}
    if den.deg > 0:
        try:
            rec["growth_rate"] = rootloc.growth_rate(den).to_dict()
        except rootloc.RootLocError:
            rec["growth_rate"] = None
    _emit(rec, args.out)
    return 0


def cmd_domino(args) -> int:
    ok, reason = gluing.validate_counts(args.l, args.m, args.n)
    if not ok:
        raise UsageError(reason)
    num, den = gluing.domino_growth((args.l, args.m, args.n)).as_growth()
    rec = {"counts": [args.l, args.m, args.n], "P": num.to_text(), "Q": den.to_text(),
           "palindromic": den == den.reverse()}
    prof = rootloc.root_profile(den)
    rec["root_profile"] = prof.to_dict()
    rec["tau"] = rootloc.growth_rate(den).to_dict()
    rec["beta"] = rootloc.reciprocal_root(den, 1).to_dict()
    if not args.skip_irreducibility:
        rec["irreducible"] = rootloc.is_irreducible(den)
        rec["salem_class"] = rootloc.classify_salem(den).kind.value
    _emit(rec, args.out)
    return 0


def cmd_census(args) -> int:
    rows = run_census(args.n_max, not args.skip_irreducibility)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            n = write_census(rows, args.format, fh)
        print(f"wrote {n} rows to {args.out}", file=sys.stderr)
    else:
        buf = io.StringIO()
        write_census(rows, args.format, buf)
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_classify(args) -> int:
    f = _read_poly(args.poly)
    _emit(rootloc.classify_salem(f).to_dict(), args.out)
    return 0


def cmd_factor(args) -> int:
    f = _read_poly(args.poly)
    try:
        factors = rootloc.factor_reciprocal(f)
    except rootloc.FactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for p in factors:
        print(p.to_text())
    return 0


def cmd_cohn(args) -> int:
    f = _read_poly(args.poly)
    if f.lead != 1:
        raise UsageError("Cohn's criterion needs a monic polynomial")
    w = rootloc.cohn_check(f, bound=args.bound, rounds=args.mr_rounds)
    rec = {"H": rootloc.cohn_height(f), "bound": args.bound, "rounds": args.mr_rounds,
           "witness": w.to_dict() if w else None}
    _emit(rec, args.out)
    return 0 if w else 1


def cmd_geometry(args) -> int:
    v = geometry.verify_domino_geometry()
    rec = v.to_dict()
    rec["ok"] = v.ok
    _emit(rec, args.out)
    return 0 if v.ok else 1


def cmd_verify(args) -> int:
    results = acceptance.verify_paper(args.golden, mr_rounds=args.mr_rounds)
    for r in results:
        print(r.line() + (f"  {r.error}" if r.error else ""))
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if args.report:
        rep = {"ok": not failed, "checks": [r.to_dict() for r in results]}
        Path(args.report).write_text(json.dumps(rep, indent=2, default=str) + "\n", encoding="utf-8")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="salemforge",
                                description="Growth functions of Coxeter groups and Salem number certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("growth", help="growth function of a Coxeter graph")
    s.add_argument("graph", help="graph file or builtin name")
    s.add_argument("--terms", type=int, default=10, help="series coefficients to print")
    s.add_argument("--out")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("domino", help="growth function of one domino polytope")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--skip-irreducibility", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_domino)

    s = sub.add_parser("census", help="sweep all valid (l, m, n) with n <= N")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--skip-irreducibility", action="store_true")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)

    for name, func, helptext in (("classify", cmd_classify, "Salem / 2-Salem classification"),
                                 ("factor", cmd_factor, "factor a palindromic polynomial")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("poly", help="file with coefficients, lowest degree first")
        if name == "classify":
            s.add_argument("--out")
        s.set_defaults(func=func)

    s = sub.add_parser("cohn", help="search for a prime value (Cohn's criterion)")
    s.add_argument("poly")
    s.add_argument("--bound", type=int, default=10000)
    s.add_argument("--mr-rounds", type=int, default=64)
    s.add_argument("--out")
    s.set_defaults(func=cmd_cohn)

    s = sub.add_parser("geometry-verify", help="Gram matrix, truncation and compactness checks")
    s.add_argument("--out")
    s.set_defaults(func=cmd_geometry)

    s = sub.add_parser("verify-paper", help="run every reproduction check")
    s.add_argument("--report")
    s.add_argument("--golden", help="alternative reference data file")
    s.add_argument("--mr-rounds", type=int, default=64)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CensusError as exc:
        print(f"census check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
