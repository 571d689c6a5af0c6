"""Finite quivers (directed multigraphs), paths and structural predicates.

Paths compose diagram-style: ``compose(p, q)`` is "p then q".  All reported
slice dimensions elsewhere in the package follow the convention that the
(y, x) slice is spanned by the paths from x to y; dimensions are invariant
under the opposite convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InfinitePathSet, InvalidQuiver, NotApplicable

VertexId = str


@dataclass(frozen=True)
class Arrow:
    name: str
    source: VertexId
    target: VertexId

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    """Vertices and arrows in insertion order; iteration order is deterministic."""

    vertices: tuple[VertexId, ...]
    arrows: tuple[Arrow, ...]

    def __init__(self, vertices: Iterable[VertexId], arrows: Iterable[Arrow] = ()):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "arrows", tuple(arrows))

    def arrows_from(self, v: VertexId) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_between(self, x: VertexId, y: VertexId) -> list[Arrow]:
        """Arrows from x to y."""
        return [a for a in self.arrows if a.source == x and a.target == y]


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence; an empty sequence is the trivial path at ``source``."""

    source: VertexId
    arrows: tuple[Arrow, ...] = ()

    def __init__(self, source: VertexId, arrows: Iterable[Arrow] = ()):
        arrows = tuple(arrows)
        if arrows:
            if arrows[0].source != source:
                raise ValueError(f"path source {source!r} does not match first arrow {arrows[0].name!r}")
            for a, b in zip(arrows, arrows[1:]):
                if a.target != b.source:
                    raise ValueError(f"arrows {a.name!r} and {b.name!r} are not composable")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "arrows", arrows)

    @property
    def target(self) -> VertexId:
        return self.arrows[-1].target if self.arrows else self.source

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def label(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(a.name for a in self.arrows)

    def sort_key(self):
        return (self.length, self.arrow_names(), self.source)


@dataclass(frozen=True)
class ParallelPair:
    """Two paths sharing both endpoints."""

    left: Path
    right: Path

    def __post_init__(self):
        if self.left.source != self.right.source or self.left.target != self.right.target:
            raise ValueError("members of a parallel pair must share source and target")


def trivial_path(v: VertexId) -> Path:
    return Path(v)


def arrow_path(a: Arrow) -> Path:
    return Path(a.source, (a,))


def validate(quiver: Quiver) -> Quiver:
    """Check all Quiver invariants; returns the quiver unchanged on success."""
    if not quiver.vertices:
        raise InvalidQuiver("empty vertex set")
    seen_v: set[str] = set()
    for v in quiver.vertices:
        if not v:
            raise InvalidQuiver("empty vertex name")
        if v in seen_v:
            raise InvalidQuiver(f"duplicate vertex name {v!r}")
        seen_v.add(v)
    seen_a: set[str] = set()
    for a in quiver.arrows:
        if not a.name:
            raise InvalidQuiver("empty arrow name")
        if a.name in seen_a:
            raise InvalidQuiver(f"duplicate arrow name {a.name!r}")
        seen_a.add(a.name)
        if a.source not in seen_v:
            raise InvalidQuiver(f"dangling endpoint: arrow {a.name!r} has unknown source {a.source!r}")
        if a.target not in seen_v:
            raise InvalidQuiver(f"dangling endpoint: arrow {a.name!r} has unknown target {a.target!r}")
    return quiver


def is_acyclic(quiver: Quiver) -> bool:
    """True iff no path of length >= 1 returns to its source (loops count as cycles)."""
    out = {v: [a.target for a in quiver.arrows_from(v)] for v in quiver.vertices}
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in quiver.vertices}
    for start in quiver.vertices:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(out[start]))]
        color[start] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == GRAY:
                    return False
                if color[w] == WHITE:
                    color[w] = GRAY
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return True


def connected_components(quiver: Quiver) -> list[Quiver]:
    """Partition by the underlying undirected graph; components ordered by first vertex."""
    neighbours: dict[str, set[str]] = {v: set() for v in quiver.vertices}
    for a in quiver.arrows:
        neighbours[a.source].add(a.target)
        neighbours[a.target].add(a.source)
    assigned: dict[str, int] = {}
    comp_order: list[list[str]] = []
    for v in quiver.vertices:
        if v in assigned:
            continue
        comp = len(comp_order)
        members: list[str] = []
        stack = [v]
        assigned[v] = comp
        while stack:
            u = stack.pop()
            members.append(u)
            for w in neighbours[u]:
                if w not in assigned:
                    assigned[w] = comp
                    stack.append(w)
        comp_order.append(members)
    result = []
    for members in comp_order:
        vset = set(members)
        verts = tuple(v for v in quiver.vertices if v in vset)
        arrs = tuple(a for a in quiver.arrows if a.source in vset)
        result.append(Quiver(verts, arrs))
    return result


def enumerate_paths(quiver: Quiver, max_length: Optional[int] = None) -> list[Path]:
    """All paths of length <= max_length (all paths when acyclic and unbounded).

    Trivial paths are included.  Output is ordered by (length, arrow names).
    """
    if max_length is None and not is_acyclic(quiver):
        raise InfinitePathSet("infinite path set: unbounded enumeration on a cyclic quiver")
    out = {v: quiver.arrows_from(v) for v in quiver.vertices}
    paths: list[Path] = [trivial_path(v) for v in quiver.vertices]
    frontier = list(paths)
    length = 0
    while frontier:
        if max_length is not None and length >= max_length:
            break
        nxt = []
        for p in frontier:
            for a in out[p.target]:
                nxt.append(Path(p.source, p.arrows + (a,)))
        paths.extend(nxt)
        frontier = nxt
        length += 1
    paths.sort(key=Path.sort_key)
    return paths


def compose(p: Path, q: Path) -> Optional[Path]:
    """Concatenation "p then q", or None when the endpoints do not match (zero product)."""
    if p.target != q.source:
        return None
    return Path(p.source, p.arrows + q.arrows)


def parallel_pairs(lefts: Iterable[Path], rights: Iterable[Path]) -> list[ParallelPair]:
    """All pairs (l, r) with matching source and matching target."""
    rights = list(rights)
    by_endpoints: dict[tuple[str, str], list[Path]] = {}
    for r in rights:
        by_endpoints.setdefault((r.source, r.target), []).append(r)
    pairs = []
    for l in lefts:
        for r in by_endpoints.get((l.source, l.target), ()):
            pairs.append(ParallelPair(l, r))
    return pairs


def is_narrow(quiver: Quiver) -> bool:
    """True iff every ordered vertex pair has at most one path (requires acyclicity)."""
    if not is_acyclic(quiver):
        raise NotApplicable("narrowness requires acyclicity")
    counts: dict[tuple[str, str], int] = {}
    for p in enumerate_paths(quiver):
        key = (p.source, p.target)
        counts[key] = counts.get(key, 0) + 1
        if counts[key] > 1:
            return False
    return True
