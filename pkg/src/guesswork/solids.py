"""Exact vertex coordinates for ten regular and quasi-regular solids.

Each solid is stored unnormalized so that every vertex has the same
integer or quadratic-ring squared norm s (the ensemble scale).  Golden
ratio coordinates are doubled to clear half-integers into Z[sqrt(5)],
and the silver-ratio solids use sqrt(2)-ring coordinates directly.
Orientation is irrelevant to every quantity computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .ensemble import Ensemble, make_ensemble


@dataclass(frozen=True)
class SolidInfo:
    name: str
    n: int
    k: int | None
    centrally_symmetric: bool
    vertex_transitive: bool


def _dedupe(vertices):
    seen = []
    for v in vertices:
        t = tuple(tuple(c) if isinstance(c, (tuple, list)) else c for c in v)
        if t not in seen:
            seen.append(t)
    return seen


def _smul(s, c):
    if isinstance(c, tuple):
        return (s * c[0], s * c[1])
    return s * c


def _all_sign_patterns(template):
    out = []
    for signs in product((1, -1), repeat=len(template)):
        out.append([_smul(s, c) for s, c in zip(signs, template)])
    return out


def _even_sign_patterns(template):
    out = []
    for signs in product((1, -1), repeat=len(template)):
        if signs.count(-1) % 2 == 0:
            out.append([_smul(s, c) for s, c in zip(signs, template)])
    return out


def _tetrahedron():
    return _even_sign_patterns([1, 1, 1]), 3, None


def _octahedron():
    vs = []
    for axis in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[axis] = s
            vs.append(v)
    return vs, 1, None


def _cube():
    return _all_sign_patterns([1, 1, 1]), 3, None


def _truncated_tetrahedron():
    vs = []
    for perm in set(permutations((1, 1, 3))):
        vs.extend(_even_sign_patterns(list(perm)))
    return _dedupe(vs), 11, None


def _cuboctahedron():
    vs = []
    for perm in set(permutations((1, 1, 0))):
        vs.extend(_all_sign_patterns(list(perm)))
    return _dedupe(vs), 2, None


def _truncated_octahedron():
    vs = []
    for perm in set(permutations((0, 1, 2))):
        vs.extend(_all_sign_patterns(list(perm)))
    return _dedupe(vs), 5, None


def _cyclic(v):
    a, b, c = v
    return [(a, b, c), (c, a, b), (b, c, a)]


def _icosahedron():
    # doubled golden rectangles: cyclic shifts of (0, +-2, +-(1 + sqrt 5))
    vs = []
    for sb, sc in product((1, -1), repeat=2):
        vs.extend(_cyclic(((0, 0), (2 * sb, 0), (sc, sc))))
    return _dedupe(vs), (10, 2), 5


def _dodecahedron():
    vs = _all_sign_patterns([(2, 0), (2, 0), (2, 0)])
    # cyclic shifts of (0, +-(sqrt 5 - 1), +-(1 + sqrt 5))
    for sb, sc in product((1, -1), repeat=2):
        vs.extend(_cyclic(((0, 0), (-sb, sb), (sc, sc))))
    return _dedupe(vs), (12, 0), 5


def _truncated_cube():
    # permutations of (+-(sqrt 2 - 1), +-1, +-1)
    vs = []
    for perm in set(permutations([(-1, 1), (1, 0), (1, 0)])):
        for signs in product((1, -1), repeat=3):
            vs.append([(s * z0, s * z1) for s, (z0, z1) in zip(signs, perm)])
    return _dedupe(vs), (5, -2), 2


def _rhombicuboctahedron():
    # permutations of (+-1, +-1, +-(1 + sqrt 2))
    vs = []
    for perm in set(permutations([(1, 0), (1, 0), (1, 1)])):
        for signs in product((1, -1), repeat=3):
            vs.append([(s * z0, s * z1) for s, (z0, z1) in zip(signs, perm)])
    return _dedupe(vs), (5, 2), 2


_BUILDERS = {
    "tetrahedron": _tetrahedron,
    "octahedron": _octahedron,
    "cube": _cube,
    "truncated tetrahedron": _truncated_tetrahedron,
    "cuboctahedron": _cuboctahedron,
    "truncated octahedron": _truncated_octahedron,
    "icosahedron": _icosahedron,
    "dodecahedron": _dodecahedron,
    "truncated cube": _truncated_cube,
    "rhombicuboctahedron": _rhombicuboctahedron,
}

_COUNTS = {
    "tetrahedron": 4,
    "octahedron": 6,
    "cube": 8,
    "truncated tetrahedron": 12,
    "cuboctahedron": 12,
    "truncated octahedron": 24,
    "icosahedron": 12,
    "dodecahedron": 20,
    "truncated cube": 24,
    "rhombicuboctahedron": 24,
}

# the two tetrahedral solids lack a center of symmetry; all ten are
# vertex transitive (verified against the symmetry finder in the tests)
_NOT_CENTRAL = {"tetrahedron", "truncated tetrahedron"}


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace("-", " ").replace("_", " ")
    key = " ".join(key.split())
    if key not in _BUILDERS:
        valid = ", ".join(sorted(_BUILDERS))
        raise ValueError(f"unknown solid {name!r}; valid names: {valid}")
    return key


def solid(name: str) -> Ensemble:
    """The named solid as an exact ensemble."""
    key = canonical_name(name)
    vertices, scale, k = _BUILDERS[key]()
    ens = make_ensemble(vertices, scale, k=k)
    assert ens.n == _COUNTS[key], f"{key}: built {ens.n} vertices"
    return ens


def list_solids() -> list[SolidInfo]:
    """Metadata for the ten available solids."""
    out = []
    for name in _BUILDERS:
        _, _, k = _BUILDERS[name]()
        out.append(
            SolidInfo(
                name=name,
                n=_COUNTS[name],
                k=k,
                centrally_symmetric=name not in _NOT_CENTRAL,
                vertex_transitive=True,
            )
        )
    return out
