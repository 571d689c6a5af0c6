"""Exact linear algebra and brute-force Hochschild oracles.

Everything runs over the exact rationals by default; a prime-field mode
(``prime=p``) exists as a cross-check and for speed.  All cohomology
dimensions are obtained from exact ranks of sparse coboundary/Leibniz
systems, never from floating point.

Sparse conventions: a matrix row is a dict column -> nonzero scalar; a
column-stored operator (action of a basis element) is a dict column ->
(dict row -> scalar).  Scalars are ints or Fractions over Q, ints mod p
over a prime field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import GuardExceeded, NotApplicable
from .presentations import Combo, StructureConstantAlgebra
from .quiver import Quiver, is_acyclic

Row = dict  # column -> scalar
ColOp = dict  # column -> {row -> scalar}

DEFAULT_DEGREE2_GUARD = 12


@dataclass(frozen=True)
class ExactMatrix:
    """A rows x cols matrix with exact entries, stored as sparse rows."""

    rows: int
    cols: int
    data: tuple

    @classmethod
    def from_rows(cls, rows: int, cols: int, data: Iterable[Row]) -> "ExactMatrix":
        return cls(rows, cols, tuple(dict(r) for r in data))

    @classmethod
    def from_dense(cls, entries) -> "ExactMatrix":
        data = []
        for row in entries:
            data.append({j: Fraction(v) for j, v in enumerate(row) if v})
        cols = max((len(row) for row in entries), default=0)
        return cls(len(entries), cols, tuple(data))


def _rank_sparse(rows: Iterable[Row], prime: Optional[int] = None) -> int:
    """Rank by sparse Gaussian elimination; exact over Q, modular over GF(p).

    Pivot rows are kept keyed by their leading (minimum) column, so reducing a
    new row only ever introduces larger columns and terminates.
    """
    pivots: dict = {}  # leading col -> reduced row
    for row in rows:
        row = {c: (v % prime if prime else v) for c, v in row.items() if (v % prime if prime else v)}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                break
            if prime:
                factor = (row[c] * pow(piv[c], -1, prime)) % prime
                for pc, pv in piv.items():
                    nv = (row.get(pc, 0) - factor * pv) % prime
                    if nv:
                        row[pc] = nv
                    else:
                        row.pop(pc, None)
            else:
                factor = Fraction(row[c], 1) / piv[c]
                for pc, pv in piv.items():
                    nv = row.get(pc, 0) - factor * pv
                    if nv:
                        row[pc] = nv
                    else:
                        row.pop(pc, None)
    return len(pivots)


def rank(m: ExactMatrix, prime: Optional[int] = None) -> int:
    return _rank_sparse(m.data, prime=prime)


def kernel_dim(m: ExactMatrix, prime: Optional[int] = None) -> int:
    return m.cols - rank(m, prime=prime)


# --- bimodules ---------------------------------------------------------------


def _col_apply(op: ColOp, vec: dict) -> dict:
    out: dict = {}
    for j, c in vec.items():
        for i, v in op.get(j, {}).items():
            nv = out.get(i, 0) + c * v
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
    return out


def _col_compose(a: ColOp, b: ColOp) -> ColOp:
    """Column form of the operator 'apply b, then a'."""
    out: ColOp = {}
    for j in b:
        col = _col_apply(a, b[j])
        if col:
            out[j] = col
    return out


def _col_combo(ops: list, combo: Combo) -> ColOp:
    out: ColOp = {}
    for k, c in combo.items():
        for j, col in ops[k].items():
            tgt = out.setdefault(j, {})
            for i, v in col.items():
                nv = tgt.get(i, 0) + c * v
                if nv:
                    tgt[i] = nv
                else:
                    tgt.pop(i, None)
            if not tgt:
                out.pop(j, None)
    return out


@dataclass(frozen=True)
class BimoduleRep:
    """A bimodule over a structure-constant algebra, via sparse action operators.

    ``left[b]`` and ``right[b]`` are the column-stored operators for the left
    and right action of algebra basis element b on the module.
    """

    algebra: StructureConstantAlgebra
    dim: int
    left: tuple
    right: tuple

    def validate(self) -> "BimoduleRep":
        alg = self.algebra
        d = alg.dimension
        for i in range(d):
            for j in range(d):
                prod = alg.product_basis(i, j)
                if _col_compose(self.left[i], self.left[j]) != _col_combo(list(self.left), prod):
                    raise AssertionError(f"left action is not a homomorphism at ({i}, {j})")
                if _col_compose(self.right[j], self.right[i]) != _col_combo(list(self.right), prod):
                    raise AssertionError(f"right action fails at ({i}, {j})")
                if _col_compose(self.left[i], self.right[j]) != _col_compose(self.right[j], self.left[i]):
                    raise AssertionError(f"actions do not commute at ({i}, {j})")
        ident = {j: {j: 1} for j in range(self.dim)}
        if _col_combo(list(self.left), alg.unit) != ident or _col_combo(list(self.right), alg.unit) != ident:
            raise AssertionError("unit does not act as identity")
        return self


def regular_bimodule(algebra: StructureConstantAlgebra) -> BimoduleRep:
    """The algebra as a bimodule over itself."""
    d = algebra.dimension
    left = []
    right = []
    for b in range(d):
        lb: ColOp = {}
        rb: ColOp = {}
        for j in range(d):
            col = algebra.product_basis(b, j)
            if col:
                lb[j] = dict(col)
            col = algebra.product_basis(j, b)
            if col:
                rb[j] = dict(col)
        left.append(lb)
        right.append(rb)
    return BimoduleRep(algebra, d, tuple(left), tuple(right)).validate()


def quotient_bimodule(path_algebra: StructureConstantAlgebra,
                      quotient: StructureConstantAlgebra) -> BimoduleRep:
    """The quotient algebra as a bimodule over the path algebra.

    Both algebras must carry path bases over the same quiver; the action is
    multiplication followed by projection onto the surviving basis paths.
    """
    if path_algebra.basis_paths is None or quotient.basis_paths is None:
        raise NotApplicable("quotient bimodule needs path bases on both algebras")
    qindex = {(p.source, p.arrow_names()): i for i, p in enumerate(quotient.basis_paths)}
    from .quiver import compose

    d = path_algebra.dimension
    dx = quotient.dimension
    left = []
    right = []
    for b in range(d):
        pb = path_algebra.basis_paths[b]
        lb: ColOp = {}
        rb: ColOp = {}
        for j in range(dx):
            xj = quotient.basis_paths[j]
            prod = compose(pb, xj)
            if prod is not None:
                k = qindex.get((prod.source, prod.arrow_names()))
                if k is not None:
                    lb[j] = {k: 1}
            prod = compose(xj, pb)
            if prod is not None:
                k = qindex.get((prod.source, prod.arrow_names()))
                if k is not None:
                    rb[j] = {k: 1}
        left.append(lb)
        right.append(rb)
    return BimoduleRep(path_algebra, dx, tuple(left), tuple(right)).validate()


# --- oracles -----------------------------------------------------------------


def invariants_dim(x: BimoduleRep, prime: Optional[int] = None) -> int:
    """dim {v : b.v = v.b for all basis b}; this is H^0 with coefficients in x."""
    rows: list[Row] = []
    for b in range(x.algebra.dimension):
        # row group: (L(b) - R(b)) v = 0
        by_row: dict[int, Row] = {}
        for j, col in x.left[b].items():
            for i, v in col.items():
                by_row.setdefault(i, {})[j] = by_row.setdefault(i, {}).get(j, 0) + v
        for j, col in x.right[b].items():
            for i, v in col.items():
                r = by_row.setdefault(i, {})
                nv = r.get(j, 0) - v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
        rows.extend(r for r in by_row.values() if r)
    return x.dim - _rank_sparse(rows, prime=prime)


def center_dim(algebra: StructureConstantAlgebra, prime: Optional[int] = None) -> int:
    return invariants_dim(regular_bimodule(algebra), prime=prime)


def derivation_space_dim(x: BimoduleRep, prime: Optional[int] = None) -> int:
    """Dimension of linear maps f with f(ab) = a.f(b) + f(a).b on all basis pairs.

    Unknowns f[b][m] are indexed b * dim(x) + m, in basis-pair lexicographic
    order, so intermediate matrices are reproducible.
    """
    alg = x.algebra
    d, dx = alg.dimension, x.dim

    def unk(b: int, m: int) -> int:
        return b * dx + m

    rows: list[Row] = []
    for i in range(d):
        li = x.left[i]
        for j in range(d):
            rj = x.right[j]
            by_row: dict[int, Row] = {}
            for k, c in alg.product_basis(i, j).items():
                for m in range(dx):
                    by_row.setdefault(m, {})[unk(k, m)] = c
            for jj, col in li.items():
                for m, v in col.items():
                    r = by_row.setdefault(m, {})
                    u = unk(j, jj)
                    nv = r.get(u, 0) - v
                    if nv:
                        r[u] = nv
                    else:
                        r.pop(u, None)
            for jj, col in rj.items():
                for m, v in col.items():
                    r = by_row.setdefault(m, {})
                    u = unk(i, jj)
                    nv = r.get(u, 0) - v
                    if nv:
                        r[u] = nv
                    else:
                        r.pop(u, None)
            rows.extend(r for r in by_row.values() if r)
    return d * dx - _rank_sparse(rows, prime=prime)


def inner_dim(x: BimoduleRep, prime: Optional[int] = None) -> int:
    """dim of inner derivations ad_v; the kernel of v -> ad_v is the invariant space."""
    return x.dim - invariants_dim(x, prime=prime)


def h1_oracle(x: BimoduleRep, prime: Optional[int] = None) -> int:
    """Derivations modulo inner derivations."""
    return derivation_space_dim(x, prime=prime) - inner_dim(x, prime=prime)


def derivations_with_coefficients(quiver: Quiver, x: BimoduleRep, prime: Optional[int] = None) -> int:
    """H^1 of the path algebra with coefficients in x (oracle route)."""
    if not is_acyclic(quiver):
        raise NotApplicable("path-algebra coefficients require an acyclic quiver")
    return h1_oracle(x, prime=prime)


# --- bar complex -------------------------------------------------------------


def _bar_coboundary_rows(x: BimoduleRep, n: int):
    """Sparse rows of the coboundary C^n -> C^{n+1} of the standard cochain complex.

    C^n = Hom(Lambda^(tensor n), X); an unknown of C^n is (b_1, ..., b_n, m)
    flattened in lexicographic order; a row is one component of the value on an
    (n+1)-tuple of basis elements.
    """
    alg = x.algebra
    d, dx = alg.dimension, x.dim

    def unk(tup: tuple[int, ...], m: int) -> int:
        idx = 0
        for b in tup:
            idx = idx * d + b
        return idx * dx + m

    def tuples(k: int):
        if k == 0:
            yield ()
            return
        for t in tuples(k - 1):
            for b in range(d):
                yield t + (b,)

    rows: list[Row] = []
    for args in tuples(n + 1):
        by_row: dict[int, Row] = {}

        def add(u: int, m: int, c):
            r = by_row.setdefault(m, {})
            nv = r.get(u, 0) + c
            if nv:
                r[u] = nv
            else:
                r.pop(u, None)

        # a_1 . f(a_2, ..., a_{n+1})
        first, rest = args[0], args[1:]
        for j, col in x.left[first].items():
            for m, v in col.items():
                add(unk(rest, j), m, v)
        # alternating inner terms f(..., a_i a_{i+1}, ...)
        sign = -1
        for i in range(n):
            merged = alg.product_basis(args[i], args[i + 1])
            for k, c in merged.items():
                tup = args[:i] + (k,) + args[i + 2 :]
                for m in range(dx):
                    add(unk(tup, m), m, sign * c)
            sign = -sign
        # (-1)^{n+1} f(a_1, ..., a_n) . a_{n+1}
        last_sign = -1 if (n + 1) % 2 else 1
        head = args[:n]
        for j, col in x.right[args[-1]].items():
            for m, v in col.items():
                add(unk(head, j), m, last_sign * v)
        rows.extend(r for r in by_row.values() if r)
    return rows


def bar_cohomology_dim(
    x: BimoduleRep, degree: int, prime: Optional[int] = None, max_dim: int = DEFAULT_DEGREE2_GUARD
) -> int:
    """Hochschild cohomology at degree 0, 1 or 2 from the standard cochain complex."""
    if degree not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    d, dx = x.algebra.dimension, x.dim
    if degree == 2 and d > max_dim:
        raise GuardExceeded(f"dimension guard exceeded: dim {d} > {max_dim} for degree 2")
    if degree == 0:
        return dx - _rank_sparse(_bar_coboundary_rows(x, 0), prime=prime)
    rank0 = _rank_sparse(_bar_coboundary_rows(x, 0), prime=prime)
    rank1 = _rank_sparse(_bar_coboundary_rows(x, 1), prime=prime)
    if degree == 1:
        return (d * dx - rank1) - rank0
    rank2 = _rank_sparse(_bar_coboundary_rows(x, 2), prime=prime)
    return (d * d * dx - rank2) - rank1
