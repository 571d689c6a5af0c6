"""Closed-form dimension formulas for the first Hochschild cohomology.

Covers: path algebras of acyclic quivers, monomial algebras with acyclic
quiver (via the effective-couple count), truncated algebras, narrow quivers,
pre-generated ideals, and the tensor-coefficients formula for bimodules over
a path algebra.  A dispatcher picks the applicable formula for a presentation.

The classical upper bound printed for the monomial case is implemented as a
LOWER bound: the diagonal couples are always non-effective, so the effective
count argument gives dim H^1 >= 1 - |Q0| + |Q1| per connected component (the
Kronecker quiver, with n^2 - 1 > n - 1, rules out the opposite direction).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotApplicable, FormulaUnavailable
from .exactalg import center_dim
from .presentations import (
    AlgebraPresentation,
    MonomialIdeal,
    StructureConstantAlgebra,
    TruncationIdeal,
    basis_B,
    build_algebra,
    contains_generator,
    is_pregenerated_monomial,
    truncated_is_pregenerated,
    truncation_generators,
)
from .quiver import (
    ParallelPair,
    Path,
    Quiver,
    VertexId,
    arrow_path,
    connected_components,
    enumerate_paths,
    is_acyclic,
    is_narrow,
    parallel_pairs,
)


@dataclass(frozen=True)
class CoupleClassification:
    """Arrow/basis-path parallel couples split into glued, effective and the rest."""

    all: tuple[ParallelPair, ...]
    glued: tuple[ParallelPair, ...]
    effective: tuple[ParallelPair, ...]
    non_effective: tuple[ParallelPair, ...]


@dataclass
class H1Report:
    dim_h1: int
    method: str
    per_component: list[tuple[str, int]] = field(default_factory=list)
    intermediates: dict = field(default_factory=dict)


def _component_label(q: Quiver) -> str:
    return q.vertices[0]


def glued_pairs(quiver: Quiver, B: list[Path]) -> list[ParallelPair]:
    """Couples (a, e) where a is the first or last arrow of e, or a loop at e's vertex."""
    out = []
    for pair in parallel_pairs([arrow_path(a) for a in quiver.arrows], B):
        a = pair.left.arrows[0]
        e = pair.right
        if e.is_trivial:
            if a.is_loop and a.source == e.source:
                out.append(pair)
        elif e.arrows[0] == a or e.arrows[-1] == a:
            out.append(pair)
    return out


def _substitutions(gamma: Path, a, e: Path) -> list[Path]:
    """Paths obtained by replacing one occurrence of arrow a inside gamma by e."""
    out = []
    for i, arr in enumerate(gamma.arrows):
        if arr == a:
            out.append(Path(gamma.source, gamma.arrows[:i] + e.arrows + gamma.arrows[i + 1 :]))
    return out


def effective_pairs(quiver: Quiver, Z: MonomialIdeal, B: list[Path]) -> CoupleClassification:
    """Classify all (arrow, basis path) couples; effective ones witness a substitution
    of the arrow by its parallel path inside some generator that lands back in B."""
    if not is_acyclic(quiver):
        raise NotApplicable("cyclic quiver unsupported for effective-couple classification")
    pairs = parallel_pairs([arrow_path(a) for a in quiver.arrows], B)
    glued = set()
    for pair in glued_pairs(quiver, B):
        glued.add((pair.left.arrows[0].name, pair.right.arrow_names(), pair.right.source))
    effective = []
    non_effective = []
    glued_list = []
    for pair in pairs:
        a = pair.left.arrows[0]
        e = pair.right
        if (a.name, e.arrow_names(), e.source) in glued:
            glued_list.append(pair)
            continue
        hit = False
        for gamma in Z.generators:
            for candidate in _substitutions(gamma, a, e):
                if not contains_generator(candidate, Z):
                    hit = True
                    break
            if hit:
                break
        (effective if hit else non_effective).append(pair)
    non_effective = glued_list + non_effective
    return CoupleClassification(
        tuple(pairs), tuple(glued_list), tuple(effective), tuple(non_effective)
    )


def _restrict_ideal(component: Quiver, Z: MonomialIdeal) -> MonomialIdeal:
    vs = set(component.vertices)
    return MonomialIdeal([z for z in Z.generators if z.source in vs])


def h1_monomial_acyclic(quiver: Quiver, Z: MonomialIdeal) -> H1Report:
    """1 - |Q0| + |non-effective couples|, summed over connected components."""
    if not is_acyclic(quiver):
        raise NotApplicable("monomial formula requires an acyclic quiver")
    per = []
    intermediates: dict = {"n_effective": 0, "n_couples": 0}
    for comp in connected_components(quiver):
        Zc = _restrict_ideal(comp, Z)
        cls = effective_pairs(comp, Zc, basis_B(comp, Zc))
        dim = 1 - len(comp.vertices) + len(cls.non_effective)
        per.append((_component_label(comp), dim))
        intermediates["n_effective"] += len(cls.effective)
        intermediates["n_couples"] += len(cls.all)
    total = sum(d for _, d in per)
    intermediates["n_vertices"] = len(quiver.vertices)
    intermediates["n_non_effective"] = intermediates["n_couples"] - intermediates["n_effective"]
    return H1Report(total, "monomial_acyclic", per, intermediates)


def h1_truncated_acyclic(quiver: Quiver, m: int) -> H1Report:
    """1 - |Q0| + |arrow/basis couples| with basis = paths of length < m."""
    if not is_acyclic(quiver):
        raise NotApplicable("truncated formula requires an acyclic quiver")
    if m < 2:
        raise NotApplicable("truncation level must be >= 2")
    per = []
    n_couples = 0
    for comp in connected_components(quiver):
        B = enumerate_paths(comp, max_length=m - 1)
        pairs = parallel_pairs([arrow_path(a) for a in comp.arrows], B)
        per.append((_component_label(comp), 1 - len(comp.vertices) + len(pairs)))
        n_couples += len(pairs)
    total = sum(d for _, d in per)
    return H1Report(
        total, "truncated_acyclic", per,
        {"n_vertices": len(quiver.vertices), "n_couples": n_couples},
    )


def h1_narrow(quiver: Quiver) -> H1Report:
    """1 - |Q0| + |Q1| per component; valid for any admissible monomial ideal."""
    if not is_narrow(quiver):
        raise NotApplicable("not narrow")
    per = []
    for comp in connected_components(quiver):
        per.append((_component_label(comp), 1 - len(comp.vertices) + len(comp.arrows)))
    return H1Report(
        sum(d for _, d in per), "narrow", per,
        {"n_vertices": len(quiver.vertices), "n_arrows": len(quiver.arrows)},
    )


def h1_path_algebra_acyclic(quiver: Quiver) -> H1Report:
    """1 - |Q0| + |path/arrow parallel couples| per component."""
    if not is_acyclic(quiver):
        raise NotApplicable("the path algebra of a cyclic quiver is infinite dimensional")
    per = []
    n_pairs = 0
    for comp in connected_components(quiver):
        paths = enumerate_paths(comp)
        pairs = parallel_pairs(paths, [arrow_path(a) for a in comp.arrows])
        per.append((_component_label(comp), 1 - len(comp.vertices) + len(pairs)))
        n_pairs += len(pairs)
    return H1Report(
        sum(d for _, d in per), "path_algebra_acyclic", per,
        {
            "n_vertices": len(quiver.vertices),
            "n_path_arrow_couples": n_pairs,
            "dim_center_per_component": 1,
            "sum_diagonal_slices": len(quiver.vertices),
        },
    )


def h1_pregenerated(presentation: AlgebraPresentation,
                    algebra: StructureConstantAlgebra) -> H1Report:
    """dim Z(A) - sum of diagonal slices + weighted arrow/slice sum (pre-generated ideals)."""
    q = presentation.quiver
    kind = presentation.kind
    if kind == "monomial":
        if not is_pregenerated_monomial(q, presentation.scheme):
            raise NotApplicable("not pre-generated")
    elif kind == "truncated":
        if not truncated_is_pregenerated(q, presentation.scheme.m):
            raise NotApplicable("not pre-generated")
    elif kind == "none":
        if not is_acyclic(q):
            raise NotApplicable("not pre-generated: zero ideal needs an acyclic quiver")
    else:
        raise NotApplicable("pre-generated test is not defined for incidence presentations")
    dim_center = center_dim(algebra)
    diag = sum(algebra.slice_dim(x, x) for x in q.vertices)
    weighted = 0
    for x in q.vertices:
        for y in q.vertices:
            n_arrows = len(q.arrows_between(x, y))
            if n_arrows:
                weighted += n_arrows * algebra.slice_dim(x, y)
    dim = dim_center - diag + weighted
    return H1Report(
        dim, "pregenerated", [],
        {"dim_center": dim_center, "sum_diagonal_slices": diag, "weighted_arrow_slices": weighted},
    )


@dataclass(frozen=True)
class BimoduleSliceData:
    """Vertex-pair slice dimensions of a bimodule over a path algebra, plus the
    dimensions of its idempotent-diagonal part and its full invariant part."""

    slice_dims: dict[tuple[VertexId, VertexId], int]
    dim_X_E: int
    dim_X_T: int


def slice_data_from_paths(quiver: Quiver, module_paths: list[Path], dim_X_T: int) -> BimoduleSliceData:
    """Slice data for a bimodule with a path basis; dim_X_T must be supplied
    (it is the invariant dimension, an exactalg computation for X != kQ)."""
    slices: dict[tuple[VertexId, VertexId], int] = {}
    for p in module_paths:
        key = (p.source, p.target)
        slices[key] = slices.get(key, 0) + 1
    dim_E = sum(n for (x, y), n in slices.items() if x == y)
    return BimoduleSliceData(slices, dim_E, dim_X_T)


def h1_tensor_coefficients(quiver: Quiver, X: BimoduleSliceData) -> int:
    """dim X^T - dim X^E + sum over vertex pairs of |arrows| * slice dim."""
    weighted = 0
    for x in quiver.vertices:
        for y in quiver.vertices:
            n_arrows = len(quiver.arrows_between(x, y))
            if n_arrows:
                weighted += n_arrows * X.slice_dims.get((x, y), 0)
    return X.dim_X_T - X.dim_X_E + weighted


def h1_bound_monomial(quiver: Quiver, Z: MonomialIdeal) -> int:
    """The lower bound 1 - |Q0| + |Q1| for a connected acyclic monomial instance."""
    if len(connected_components(quiver)) != 1:
        raise NotApplicable("bound requires a connected quiver")
    if not is_acyclic(quiver):
        raise NotApplicable("bound requires an acyclic quiver")
    return 1 - len(quiver.vertices) + len(quiver.arrows)


def classify_and_compute(presentation: AlgebraPresentation) -> H1Report:
    """Select the applicable closed formula, preferring purely combinatorial ones."""
    q = presentation.quiver
    kind = presentation.kind
    acyclic = is_acyclic(q)
    if kind == "none" and acyclic:
        return h1_path_algebra_acyclic(q)
    if kind == "truncated" and acyclic:
        return h1_truncated_acyclic(q, presentation.scheme.m)
    if kind == "monomial" and acyclic:
        return h1_monomial_acyclic(q, presentation.scheme)
    if kind == "truncated" and truncated_is_pregenerated(q, presentation.scheme.m):
        return h1_pregenerated(presentation, build_algebra(presentation))
    if kind == "monomial":
        from .presentations import is_admissible_monomial

        if is_admissible_monomial(q, presentation.scheme) and is_pregenerated_monomial(q, presentation.scheme):
            return h1_pregenerated(presentation, build_algebra(presentation))
    raise FormulaUnavailable("formula unavailable, use oracle")
