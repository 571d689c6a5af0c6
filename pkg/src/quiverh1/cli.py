"""Command-line interface: parse presentation/poset files, run formulas, run
the oracle, and cross-check the two.

File grammar (line-oriented, '#' starts a comment):

    quiver <name>
    vertex <id>
    arrow <id> <source> <target>
    relation monomial <arrow-id> ...     # arrows in traversal order
    relation truncate <m>
    end

    poset <name>
    element <id>
    covers <upper> <lower>
    relation <a> <= <b>
    end

Exit statuses: 0 success/agreement, 1 mismatch, 2 input error, 3 unsupported.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Union

from . import exactalg, formulas, simplicial
from .errors import FormulaUnavailable, GuardExceeded, ParseError, QuiverH1Error
from .presentations import (
    AlgebraPresentation,
    MonomialIdeal,
    TruncationIdeal,
    build_algebra,
    check_minimal,
)
from .quiver import Arrow, Path, Quiver, validate
from .simplicial import Poset

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


@dataclass(frozen=True)
class InputDocument:
    kind: str  # "quiver-presentation" | "poset"
    name: str
    body: Union[AlgebraPresentation, Poset]


@dataclass
class RunReport:
    name: str
    field: str
    methods: dict = field(default_factory=dict)  # method -> dim_h1
    intermediates: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def agree(self) -> bool:
        values = set(self.methods.values())
        return len(values) <= 1

    def primary_method(self) -> str:
        return next(iter(self.methods), "")

    def to_json(self) -> dict:
        dims = list(self.methods.values())
        return {
            "name": self.name,
            "method": ",".join(self.methods),
            "dim_h1": dims[0] if len(set(dims)) == 1 and dims else None,
            "intermediates": self.intermediates,
            "checks": {**self.checks, "agree": self.agree, "elapsed_s": round(self.elapsed, 4)},
            "field": self.field,
        }


def parse(text: str) -> InputDocument:
    """Parse one document; raises ParseError with a 1-based line number."""
    kind = None
    name = None
    vertices: list[str] = []
    arrows: list[Arrow] = []
    arrow_by_name: dict[str, Arrow] = {}
    monomials: list[list[str]] = []
    truncate: Optional[int] = None
    elements: list[str] = []
    pairs: list[tuple[str, str]] = []
    ended = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if kind is None:
            if head == "quiver" and len(tokens) == 2:
                kind, name = "quiver-presentation", tokens[1]
            elif head == "poset" and len(tokens) == 2:
                kind, name = "poset", tokens[1]
            else:
                raise ParseError(lineno, "expected 'quiver <name>' or 'poset <name>'")
            continue
        if ended:
            raise ParseError(lineno, "content after 'end'")
        if head == "end":
            if len(tokens) != 1:
                raise ParseError(lineno, "'end' takes no arguments")
            ended = True
        elif kind == "quiver-presentation":
            if head == "vertex" and len(tokens) == 2:
                if tokens[1] in vertices:
                    raise ParseError(lineno, f"duplicate definition of vertex {tokens[1]!r}")
                vertices.append(tokens[1])
            elif head == "arrow" and len(tokens) == 4:
                nm, src, tgt = tokens[1:]
                if nm in arrow_by_name:
                    raise ParseError(lineno, f"duplicate definition of arrow {nm!r}")
                if src not in vertices:
                    raise ParseError(lineno, f"unresolved name: vertex {src!r}")
                if tgt not in vertices:
                    raise ParseError(lineno, f"unresolved name: vertex {tgt!r}")
                a = Arrow(nm, src, tgt)
                arrows.append(a)
                arrow_by_name[nm] = a
            elif head == "relation" and len(tokens) >= 2 and tokens[1] == "monomial":
                if truncate is not None:
                    raise ParseError(lineno, "cannot mix 'monomial' and 'truncate' relations")
                if len(tokens) < 4:
                    raise ParseError(lineno, "monomial relation needs at least two arrows")
                for nm in tokens[2:]:
                    if nm not in arrow_by_name:
                        raise ParseError(lineno, f"unresolved name: arrow {nm!r}")
                monomials.append(tokens[2:])
            elif head == "relation" and len(tokens) == 3 and tokens[1] == "truncate":
                if monomials:
                    raise ParseError(lineno, "cannot mix 'monomial' and 'truncate' relations")
                if truncate is not None:
                    raise ParseError(lineno, "duplicate truncate relation")
                try:
                    truncate = int(tokens[2])
                except ValueError:
                    raise ParseError(lineno, f"invalid truncation level {tokens[2]!r}")
                if truncate < 2:
                    raise ParseError(lineno, "truncation level must be >= 2")
            else:
                raise ParseError(lineno, f"unknown directive {line!r}")
        else:  # poset
            if head == "element" and len(tokens) == 2:
                if tokens[1] in elements:
                    raise ParseError(lineno, f"duplicate definition of element {tokens[1]!r}")
                elements.append(tokens[1])
            elif head == "covers" and len(tokens) == 3:
                upper, lower = tokens[1], tokens[2]
                for e in (upper, lower):
                    if e not in elements:
                        raise ParseError(lineno, f"unresolved name: element {e!r}")
                pairs.append((lower, upper))  # covers upper lower means lower <= upper
            elif head == "relation" and len(tokens) == 4 and tokens[2] == "<=":
                for e in (tokens[1], tokens[3]):
                    if e not in elements:
                        raise ParseError(lineno, f"unresolved name: element {e!r}")
                pairs.append((tokens[1], tokens[3]))
            else:
                raise ParseError(lineno, f"unknown directive {line!r}")

    if kind is None:
        raise ParseError(1, "empty document")
    if not ended:
        raise ParseError(len(text.splitlines()) or 1, "missing 'end'")

    if kind == "poset":
        try:
            poset = Poset.from_pairs(elements, pairs)
        except QuiverH1Error as exc:
            raise ParseError(1, str(exc))
        return InputDocument(kind, name, poset)

    quiver = Quiver(vertices, arrows)
    try:
        validate(quiver)
        if truncate is not None:
            scheme = TruncationIdeal(truncate)
        elif monomials:
            gens = []
            for names in monomials:
                seq = [arrow_by_name[n] for n in names]
                try:
                    gens.append(Path(seq[0].source, seq))
                except ValueError as exc:
                    raise ParseError(1, f"relation is not a path: {exc}")
            scheme = check_minimal(quiver, gens)
        else:
            scheme = None
    except ParseError:
        raise
    except QuiverH1Error as exc:
        raise ParseError(1, str(exc))
    return InputDocument(kind, name, AlgebraPresentation(quiver, scheme))


def serialize(doc: InputDocument) -> str:
    """Render a document back to the file grammar (parse . serialize = identity)."""
    lines = []
    if doc.kind == "poset":
        poset = doc.body
        lines.append(f"poset {doc.name}")
        for e in poset.elements:
            lines.append(f"element {e}")
        for upper, lower in poset.covers():
            lines.append(f"covers {upper} {lower}")
    else:
        pres = doc.body
        lines.append(f"quiver {doc.name}")
        for v in pres.quiver.vertices:
            lines.append(f"vertex {v}")
        for a in pres.quiver.arrows:
            lines.append(f"arrow {a.name} {a.source} {a.target}")
        if pres.kind == "truncated":
            lines.append(f"relation truncate {pres.scheme.m}")
        elif pres.kind == "monomial":
            for z in pres.scheme.generators:
                lines.append("relation monomial " + " ".join(z.arrow_names()))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _field_label(prime: Optional[int]) -> str:
    return "q" if prime is None else f"fp:{prime}"


def run_formula(doc: InputDocument) -> RunReport:
    if doc.kind != "quiver-presentation":
        raise FormulaUnavailable("formula mode needs a quiver presentation")
    t0 = time.perf_counter()
    report = formulas.classify_and_compute(doc.body)
    out = RunReport(doc.name, "q")
    out.methods[report.method] = report.dim_h1
    out.intermediates = dict(report.intermediates)
    if report.per_component:
        out.intermediates["per_component"] = report.per_component
    out.elapsed = time.perf_counter() - t0
    return out


def run_oracle(doc: InputDocument, prime: Optional[int] = None, max_dim: int = exactalg.DEFAULT_DEGREE2_GUARD) -> RunReport:
    t0 = time.perf_counter()
    if doc.kind == "poset":
        algebra = simplicial.incidence_algebra(doc.body)
    else:
        algebra = build_algebra(doc.body)
    rep = exactalg.regular_bimodule(algebra)
    out = RunReport(doc.name, _field_label(prime))
    out.methods["oracle"] = exactalg.h1_oracle(rep, prime=prime)
    out.intermediates["dim_algebra"] = algebra.dimension
    out.intermediates["dim_derivations"] = exactalg.derivation_space_dim(rep, prime=prime)
    out.intermediates["dim_inner"] = exactalg.inner_dim(rep, prime=prime)
    if algebra.dimension <= max_dim:
        for deg in (0, 1, 2):
            out.checks[f"bar_h{deg}"] = exactalg.bar_cohomology_dim(rep, deg, prime=prime, max_dim=max_dim)
        out.checks["bar_h1_matches"] = out.checks["bar_h1"] == out.methods["oracle"]
    out.elapsed = time.perf_counter() - t0
    return out


def run_check(doc: InputDocument, prime: Optional[int] = None, max_dim: int = exactalg.DEFAULT_DEGREE2_GUARD) -> RunReport:
    formula = run_formula(doc)
    oracle = run_oracle(doc, prime=prime, max_dim=max_dim)
    merged = RunReport(doc.name, oracle.field)
    merged.methods.update(formula.methods)
    merged.methods.update(oracle.methods)
    merged.intermediates.update(formula.intermediates)
    merged.intermediates.update(oracle.intermediates)
    merged.checks.update(oracle.checks)
    merged.elapsed = formula.elapsed + oracle.elapsed
    return merged


def run_poset(doc: InputDocument, prime: Optional[int] = None) -> RunReport:
    if doc.kind != "poset":
        raise FormulaUnavailable("poset mode needs a poset document")
    t0 = time.perf_counter()
    cmp = simplicial.gs_compare(doc.body, prime=prime)
    out = RunReport(doc.name, _field_label(prime))
    out.methods["incidence_oracle"] = cmp.dim_h1_incidence
    out.methods["simplicial"] = cmp.dim_h1_simplicial
    out.elapsed = time.perf_counter() - t0
    return out


def _print_report(report: RunReport, as_json: bool, per_component: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json(), indent=2, default=str))
        return
    print(f"name: {report.name}")
    print(f"field: {report.field}")
    for method, dim in report.methods.items():
        print(f"dim H1 [{method}]: {dim}")
    if per_component and "per_component" in report.intermediates:
        for label, dim in report.intermediates["per_component"]:
            print(f"  component {label}: {dim}")
    for key, value in report.intermediates.items():
        if key == "per_component":
            continue
        print(f"  {key}: {value}")
    for key, value in report.checks.items():
        print(f"  check {key}: {value}")
    if len(report.methods) > 1:
        print(f"agreement: {'yes' if report.agree else 'MISMATCH'}")


def _parse_field(spec: str) -> Optional[int]:
    if spec == "q":
        return None
    if spec.startswith("fp:"):
        p = int(spec[3:])
        if p < 2:
            raise ValueError("prime must be >= 2")
        return p
    raise ValueError(f"unknown field {spec!r} (use 'q' or 'fp:<prime>')")


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="quiverh1",
        description="First Hochschild cohomology of quiver algebras: formulas and exact oracle.",
    )
    parser.add_argument("command", choices=["formula", "oracle", "check", "poset"])
    parser.add_argument("files", nargs="+", help="input document files")
    parser.add_argument("--field", default="q", help="q (rationals, default) or fp:<prime>")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--max-dim", type=int, default=exactalg.DEFAULT_DEGREE2_GUARD,
                        help="raise the degree-2 oracle dimension guard")
    parser.add_argument("--per-component", action="store_true", help="print component breakdowns")
    args = parser.parse_args(argv)

    try:
        prime = _parse_field(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    status = EXIT_OK
    for path in args.files:
        try:
            with open(path) as fh:
                doc = parse(fh.read())
        except (OSError, ParseError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        try:
            if args.command == "formula":
                report = run_formula(doc)
            elif args.command == "oracle":
                report = run_oracle(doc, prime=prime, max_dim=args.max_dim)
            elif args.command == "check":
                report = run_check(doc, prime=prime, max_dim=args.max_dim)
            else:
                report = run_poset(doc, prime=prime)
        except FormulaUnavailable as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        except GuardExceeded as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        except QuiverH1Error as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        _print_report(report, args.json, args.per_component)
        if not report.agree:
            status = EXIT_MISMATCH
    return status


if __name__ == "__main__":
    raise SystemExit(main())
