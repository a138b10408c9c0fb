"""Batch front end: ``analyze <specfile> [options]``.

Exit codes: 0 all reports consistent (or nothing to report), 1 usage or
parse error, 2 every theorem report was not-applicable, 3 some report was
inconsistent.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from . import hilbert as hb
from . import kmcomplex as km
from . import postulation as pst
from . import reduction as rd
from .filtration import box_points
from .report import INCONSISTENT, NOT_APPLICABLE, TheoremReport
from .specdoc import COMMANDS, SpecDocument, SpecError, parse_spec

FORMATS = ("table", "structured", "plotdata")
THREADS_ENV = "MULTIFILT_THREADS"
GOLDEN = ("ex4_closure", "ex5_semigroup", "ex5_noncm", "ex6a", "ex6b")


def golden_text(name: str) -> str:
    return resources.files("multifilt.golden").joinpath(f"{name}.spec").read_text()


def golden_path(name: str):
    return resources.files("multifilt.golden").joinpath(f"{name}.spec")


@dataclass
class ResultBundle:
    command: str = ""
    polynomial: dict | None = None
    hilbert_table: list = field(default_factory=list)   # [n, H(n), P(n)]
    regions: dict = field(default_factory=dict)         # name -> {corners, box, margin}
    reductions: list = field(default_factory=list)
    reports: list = field(default_factory=list)         # TheoremReport.to_dict()
    values: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Machine-readable form; timing is left out so output is byte-stable."""
        return {"format": "multifilt-result/1", "command": self.command, "polynomial": self.polynomial,
                "hilbert_table": self.hilbert_table, "regions": self.regions,
                "reductions": self.reductions, "reports": self.reports, "values": self.values}

    def exit_code(self) -> int:
        verdicts = [r["verdict"] for r in self.reports]
        if INCONSISTENT in verdicts:
            return 3
        if verdicts and all(v == NOT_APPLICABLE for v in verdicts):
            return 2
        return 0


def _region_entry(region):
    return {"corners": [list(c) for c in region.corners], "box": region.box, "margin": region.margin}


# pipeline ---------------------------------------------------------------------


class _Context:
    def __init__(self, doc: SpecDocument):
        self.doc = doc
        self.F = doc.filtration()
        self.ring = doc.ring
        self.d = doc.ring.dimension
        self._P = None
        self._reductions = None

    @property
    def P(self):
        if self._P is None:
            self._P = hb.fit_polynomial(self.F, self.d, base_offset=self.doc.base_offset)
        return self._P

    def reductions(self):
        """Reductions from the document, or the first one found by search."""
        if self._reductions is None:
            doc = self.doc
            found = [(name, rd.make_complete_reduction(self.F, rows, doc.box, doc.margin))
                     for name, rows in doc.reductions.items()]
            if not found:
                A = rd.search_monomial_reduction(self.F, box=doc.box, margin=doc.margin)
                if A is not None:
                    found = [("searched", A)]
            self._reductions = found
        return self._reductions

    def primary(self):
        for _, A in self.reductions():
            if A.certified:
                return A
        return None


def _section_hilbert(ctx: _Context, out: ResultBundle):
    F, P, doc = ctx.F, ctx.P, ctx.doc
    out.polynomial = P.to_dict()
    out.values["polynomial_text"] = P.as_text()
    out.hilbert_table = [[list(n), hb.hilbert_function(F, n), P(n)] for n in box_points(F.s, doc.box)]
    lc = hb.leading_coefficient_identity(F, P, base_offset=doc.base_offset)
    rep = TheoremReport("coefficient-identities")
    rep.conclusion(f"Delta^d P = e_0(product) = {lc.product_e0}", lc.leading_holds)
    rep.conclusion(f"weighted top coefficients sum to e_0(product) ({lc.weighted_top_sum})",
                   lc.weighted_top_sum == lc.product_e0)
    rep.conclusion(f"e_0 index coefficient {lc.constant} = e_d of n -> F(n e) ({lc.diagonal_ed})",
                   lc.constant_holds)
    out.reports.append(rep.to_dict())
    f = hb.difference_function(F, P)
    regions = [hb.vanishing_region(f, j, F.s, doc.box, doc.margin).corners for j in range(ctx.d + 1)]
    out.values["vanishing_regions_agree"] = all(r == regions[0] for r in regions)
    out.reports.append(hb.verify_vanishing_theorem(F, ctx.d, doc.box, P).to_dict())


def _section_reductions(ctx: _Context, out: ResultBundle):
    F, doc = ctx.F, ctx.doc
    found = ctx.reductions()
    if not found:
        out.values["reduction_search"] = "no monomial complete reduction found"
    for name, A in found:
        entry = {"name": name, **A.to_dict(ctx.ring)}
        if A.certified:
            region = rd.reduction_vectors(A, F, doc.box, doc.margin)
            out.regions[f"R_A[{name}]"] = _region_entry(region)
            entry["reduction_number"] = rd.reduction_number_from_region(region) if region.corners else None
            entry["good"] = rd.is_good(A, F, doc.box, doc.margin)
            entry["induced_reductions"] = rd.induced_reductions_check(A, F, doc.box)
        out.reductions.append(entry)


def _section_postulation(ctx: _Context, out: ResultBundle):
    F, P, doc = ctx.F, ctx.P, ctx.doc
    post = pst.postulation_region(F, P, doc.box, doc.margin)
    out.regions["P"] = _region_entry(post)
    A = ctx.primary()
    others = [B for _, B in ctx.reductions() if B.certified]
    if ctx.d == 1:
        out.reports.append(pst.verify_dim1_correspondence(F, A, doc.box, doc.margin, P).to_dict())
    else:
        out.reports.append(pst.verify_dim2_bijection(F, A, doc.box, doc.margin, P, others).to_dict())
        if F.s == 2:
            out.reports.append(pst.verify_dim2_equivalences(F, doc.box, doc.margin, P).to_dict())


def _section_huneke(ctx: _Context, out: ResultBundle):
    A = ctx.primary()
    rep = None
    if A is None:
        rep = TheoremReport("huneke-analogue")
        rep.hypothesis("certified complete reduction", False)
    else:
        rep = km.huneke_report(ctx.F, A, ctx.P, ctx.doc.box)
    out.reports.append(rep.to_dict())


def _section_h1(ctx: _Context, out: ResultBundle):
    F, doc = ctx.F, ctx.doc
    if ctx.d < 2 or not ctx.ring.is_cohen_macaulay:
        out.values["rees_h1"] = "not defined for this ring (needs d >= 2 and Cohen-Macaulay)"
        return
    out.values["rees_h1"] = [[list(n), km.rees_h1(F, n)] for n in box_points(F.s, doc.box)]
    A = ctx.primary()
    if A is None:
        rep = TheoremReport("good-reduction-intersection")
        rep.hypothesis("certified complete reduction", False)
        out.reports.append(rep.to_dict())
    else:
        out.reports.append(km.good_reduction_intersection(F, A, doc.box, doc.box, doc.margin).to_dict())


SECTIONS = {
    "hilbert": (_section_hilbert,),
    "reductions": (_section_reductions,),
    "postulation": (_section_postulation,),
    "huneke": (_section_huneke,),
    "h1": (_section_h1,),
    "verify-all": (_section_hilbert, _section_reductions, _section_postulation, _section_huneke, _section_h1),
}


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise SpecError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise SpecError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def run(doc: SpecDocument, command: str | None = None) -> ResultBundle:
    """Execute the requested pipeline.  With no command, the document's own list is used."""
    commands = (command,) if command else doc.commands
    for c in commands:
        if c not in COMMANDS:
            raise SpecError(f"unknown command {c!r}")
    out = ResultBundle(command=",".join(commands))
    if not commands:
        return out
    ctx = _Context(doc)
    sections = []
    for c in commands:
        for sec in SECTIONS[c]:
            if sec not in sections:
                sections.append(sec)
    # fit once up front so parallel sections share it
    if any(s in (_section_hilbert, _section_postulation, _section_huneke) for s in sections):
        _ = ctx.P
        ctx.reductions()
    partial = [ResultBundle() for _ in sections]

    def go(i):
        t0 = time.perf_counter()
        sections[i](ctx, partial[i])
        return time.perf_counter() - t0

    n = _threads()
    if n > 1:
        with ThreadPoolExecutor(n) as pool:
            times = list(pool.map(go, range(len(sections))))
    else:
        times = [go(i) for i in range(len(sections))]
    for sec, part, t in zip(sections, partial, times):
        out.polynomial = part.polynomial or out.polynomial
        out.hilbert_table = part.hilbert_table or out.hilbert_table
        out.regions.update(part.regions)
        out.reductions.extend(part.reductions)
        out.reports.extend(part.reports)
        out.values.update(part.values)
        out.timing[sec.__name__.removeprefix("_section_")] = round(t, 6)
    return out


# output -----------------------------------------------------------------------


def _fmt_corners(corners):
    return "{" + ", ".join("(" + ",".join(map(str, c)) + ")" for c in corners) + "}"


def _table(bundle: ResultBundle) -> str:
    lines = [f"command: {bundle.command or '(none)'}"]
    if bundle.polynomial:
        p = bundle.polynomial
        lines.append(f"Hilbert polynomial (s={p['s']}, d={p['d']}, fitted from offset {p['base_offset']}, "
                     f"validated {p['validation_margin']} further out)")
        body = ", ".join(f"({','.join(map(str, a))}):{e}" for a, e in p["coefficients"])
        lines.append("e = {" + body + "}")
    if bundle.hilbert_table:
        lines.append("")
        w = max(len(str(tuple(n))) for n, _, _ in bundle.hilbert_table)
        lines.append(f"{'n':<{w}}  {'H(n)':>6}  {'P(n)':>6}")
        for n, h, p in bundle.hilbert_table:
            mark = "" if h == p else "  *"
            lines.append(f"{str(tuple(n)):<{w}}  {h:>6}  {p:>6}{mark}")
    if bundle.regions:
        lines.append("")
        for name, r in bundle.regions.items():
            lines.append(f"{name}: corners {_fmt_corners(r['corners'])} "
                         f"(verified on box {r['box']}, margin {r['margin']})")
    for red in bundle.reductions:
        lines.append("")
        mat = ";".join(",".join(row) for row in red["matrix"])
        lines.append(f"reduction {red['name']}: ({mat})  y = ({', '.join(red['y'])})  "
                     f"certified={red['certified']}")
        if "reduction_number" in red:
            lines.append(f"  r_A = {red['reduction_number']}  good = {red['good']}  "
                         f"induced reductions at n = {red['induced_reductions']}")
    for key, val in bundle.values.items():
        if key == "polynomial_text":
            continue
        if key == "rees_h1" and isinstance(val, list):
            nz = [(tuple(n), v) for n, v in val if v]
            lines.append(f"rees_h1: {'zero on the box' if not nz else 'nonzero at ' + str(nz)}")
        else:
            lines.append(f"{key}: {val}")
    for rep in bundle.reports:
        lines.append("")
        lines.append(f"{rep['theorem']}: {rep['verdict']}")
        for name, where, holds in rep["hypotheses"]:
            lines.append(f"  hypothesis {'ok  ' if holds else 'FAIL'} {name}" + (f" [{where}]" if where else ""))
        for name, holds in rep["conclusions"]:
            lines.append(f"  conclusion {'ok  ' if holds else 'FAIL'} {name}")
        lines.extend(f"  note: {n}" for n in rep["notes"])
    return "\n".join(lines) + "\n"


def _plotdata(bundle: ResultBundle) -> str:
    buf = io.StringIO()
    buf.write("# region membership on the certification box; exact values live in the structured format\n")
    regions = bundle.regions
    if not regions:
        return buf.getvalue()
    s = len(next(iter(regions.values()))["corners"][0]) if any(r["corners"] for r in regions.values()) else 2
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["region"] + [f"n{i + 1}" for i in range(s)] + ["in_region", "is_corner"])
    for name, r in regions.items():
        corners = [tuple(c) for c in r["corners"]]
        for n in box_points(s, r["box"]):
            inside = any(all(a >= b for a, b in zip(n, c)) for c in corners)
            w.writerow([name, *n, int(inside), int(n in corners)])
    return buf.getvalue()


def emit(bundle: ResultBundle, fmt: str = "table") -> bytes:
    if fmt == "table":
        return _table(bundle).encode()
    if fmt == "structured":
        return (json.dumps(bundle.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode()
    if fmt == "plotdata":
        return _plotdata(bundle).encode()
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def read_structured(data) -> ResultBundle:
    """Inverse of emit(..., 'structured'); timing comes back empty."""
    if isinstance(data, bytes):
        data = data.decode()
    obj = json.loads(data)
    if obj.get("format") != "multifilt-result/1":
        raise ValueError("not a multifilt result document")
    return ResultBundle(command=obj["command"], polynomial=obj["polynomial"],
                        hilbert_table=obj["hilbert_table"], regions=obj["regions"],
                        reductions=obj["reductions"], reports=obj["reports"], values=obj["values"])


# entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="analyze", description="Analyse a multigraded filtration spec.")
    p.add_argument("specfile", help="spec document, or golden:NAME for a shipped example")
    p.add_argument("--command", choices=COMMANDS, default=None)
    p.add_argument("--box", type=int, default=None)
    p.add_argument("--margin", type=int, default=None)
    p.add_argument("--offset", type=int, default=None, help="base offset for polynomial fitting")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if args.specfile.startswith("golden:"):
            text = golden_text(args.specfile.split(":", 1)[1])
        else:
            with open(args.specfile, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_spec(text)
        for attr, lo in (("box", 2), ("margin", 0), ("offset", 1)):
            v = getattr(args, attr)
            if v is not None:
                if v < lo:
                    raise SpecError(f"--{attr} must be >= {lo}")
                setattr(doc, "base_offset" if attr == "offset" else attr, v)
        bundle = run(doc, args.command)
    except (OSError, SpecError, FileNotFoundError) as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 1
    data = emit(bundle, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return bundle.exit_code()


if __name__ == "__main__":
    sys.exit(main())
