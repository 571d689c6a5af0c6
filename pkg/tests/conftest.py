import random
from pathlib import Path as FsPath

import pytest

from quiverh1.quiver import Arrow, Path, Quiver, connected_components, trivial_path
from quiverh1.presentations import MonomialIdeal, basis_B, check_minimal

FIXTURE_DIR = FsPath(__file__).resolve().parents[1] / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURE_DIR / name).read_text()


# --- hand-built quivers used across modules ---


def a2():
    a = Arrow("a", "x", "y")
    return Quiver(["x", "y"], [a])


def a3():
    a = Arrow("a", "x", "y")
    b = Arrow("b", "y", "z")
    return Quiver(["x", "y", "z"], [a, b])


def kronecker(n: int) -> Quiver:
    return Quiver(["x", "y"], [Arrow(f"a{i}", "x", "y") for i in range(n)])


def cycle(n: int) -> Quiver:
    verts = [f"v{i}" for i in range(n)]
    arrows = [Arrow(f"c{i}", verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Quiver(verts, arrows)


def crown_quiver() -> Quiver:
    return Quiver(
        ["a", "b", "c", "d"],
        [Arrow("ac", "a", "c"), Arrow("ad", "a", "d"), Arrow("bc", "b", "c"), Arrow("bd", "b", "d")],
    )


def branch() -> Quiver:
    """1 --a--> 2 with two parallel arrows b, c from 2 to 3."""
    return Quiver(
        ["v1", "v2", "v3"],
        [Arrow("a", "v1", "v2"), Arrow("b", "v2", "v3"), Arrow("c", "v2", "v3")],
    )


def path_of(quiver: Quiver, *names: str) -> Path:
    by_name = {a.name: a for a in quiver.arrows}
    arrows = [by_name[n] for n in names]
    return Path(arrows[0].source, arrows)


def dp_path_count(quiver: Quiver) -> int:
    """Independent oracle: total path count on an acyclic quiver by dynamic
    programming over a topological order (counts trivial paths too)."""
    indeg = {v: 0 for v in quiver.vertices}
    for a in quiver.arrows:
        indeg[a.target] += 1
    order = [v for v in quiver.vertices if indeg[v] == 0]
    i = 0
    while i < len(order):
        for a in quiver.arrows_from(order[i]):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                order.append(a.target)
        i += 1
    assert len(order) == len(quiver.vertices), "dp oracle needs an acyclic quiver"
    # paths_from[v] counts paths starting at v
    paths_from = {v: 1 for v in quiver.vertices}
    for v in reversed(order):
        paths_from[v] = 1 + sum(paths_from[a.target] for a in quiver.arrows_from(v))
    return sum(paths_from.values())


# --- random instance generation (seeded, deterministic) ---


def random_connected_dag(rng: random.Random, max_vertices: int = 5, max_arrows: int = 8) -> Quiver:
    while True:
        nv = rng.randint(2, max_vertices)
        na = rng.randint(nv - 1, max_arrows)
        verts = [f"v{i}" for i in range(nv)]
        arrows = []
        for k in range(na):
            i = rng.randint(0, nv - 2)
            j = rng.randint(i + 1, nv - 1)
            arrows.append(Arrow(f"a{k}", verts[i], verts[j]))
        q = Quiver(verts, arrows)
        if len(connected_components(q)) == 1:
            return q


def random_minimal_ideal(rng: random.Random, quiver: Quiver) -> MonomialIdeal:
    from quiverh1.quiver import enumerate_paths

    candidates = [p for p in enumerate_paths(quiver) if p.length >= 2]
    rng.shuffle(candidates)
    chosen: list[Path] = []
    for p in candidates:
        if rng.random() < 0.6:
            from quiverh1.presentations import _occurrences

            if any(_occurrences(p, z) or _occurrences(z, p) for z in chosen):
                continue
            chosen.append(p)
    return check_minimal(quiver, chosen)


def random_monomial_instances(seed: int, count: int, max_dim: int = 30):
    """Connected acyclic quivers with minimal monomial ideals, algebra dim <= max_dim."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = random_connected_dag(rng)
        Z = random_minimal_ideal(rng, q)
        if len(basis_B(q, Z)) <= max_dim:
            out.append((q, Z))
    return out


@pytest.fixture(scope="session")
def monomial_instances():
    return random_monomial_instances(seed=20260823, count=100)
