"""Finite point sets of exact ring vectors with a common norm scale.

An ensemble stores unnormalized coordinate vectors together with the
scale s, the common squared norm of the stored vectors; the physical
unit-ball vector is the stored vector divided by sqrt(s).  Keeping the
scale out of the coordinates keeps every inner-loop operation
division-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .ring import INTEGERS, RingId, Scalar, embed, is_nonneg

Vector = tuple[Scalar, ...]


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vec_scale(n: int, a: Vector) -> Vector:
    return tuple(x * n for x in a)


def vec_dot(a: Vector, b: Vector) -> Scalar:
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        acc = acc + x * y
    return acc


def norm_sq(a: Vector) -> Scalar:
    return vec_dot(a, a)


@dataclass(frozen=True)
class Ensemble:
    """N distinct d-dimensional ring vectors sharing one scale s > 0."""

    ring: RingId
    dim: int
    vectors: tuple[Vector, ...]
    scale: Scalar
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.vectors:
            raise ValueError("ensemble must contain at least one vector")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.scale.ring != self.ring:
            raise ValueError("scale must live in the ensemble ring")
        if not is_nonneg(self.scale) or self.scale.is_zero():
            raise ValueError("scale must be > 0")
        seen = {}
        for idx, v in enumerate(self.vectors):
            if len(v) != self.dim:
                raise ValueError(f"vector {idx} has dimension {len(v)}, expected {self.dim}")
            for c in v:
                if c.ring != self.ring:
                    raise ValueError(f"vector {idx} mixes rings; embed coordinates explicitly")
            if v in seen:
                raise ValueError(f"vectors {seen[v]} and {idx} are identical")
            seen[v] = idx
            if not is_nonneg(self.scale - norm_sq(v)):
                raise ValueError(f"vector {idx} has squared norm exceeding the scale")
        object.__setattr__(self, "_index", seen)

    @property
    def n(self) -> int:
        return len(self.vectors)

    def index_of(self, v: Vector) -> int | None:
        return self._index.get(v)

    def antipode_map(self) -> list[int | None]:
        """For each vector index, the index of its negation (None if absent)."""
        return [self.index_of(vec_neg(v)) for v in self.vectors]

    def zero_index(self) -> int | None:
        zero = tuple(Scalar(self.ring, 0, 0) for _ in range(self.dim))
        return self.index_of(zero)

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.vectors, self.scale))


def make_ensemble(
    vectors: Sequence[Sequence[int | tuple[int, int] | list | Scalar]],
    scale: int | tuple[int, int] | list | Scalar,
    k: int | None = None,
) -> Ensemble:
    """Build an ensemble from raw coordinates.

    Coordinates may be plain ints, (z0, z1) pairs (quadratic rings only),
    or Scalar values.  Plain ints are embedded into the quadratic ring
    when k is given; this is the one place coercion happens.
    """
    ring = INTEGERS if k is None else RingId(k)

    def coerce(c, where: str) -> Scalar:
        if isinstance(c, Scalar):
            return embed(c, ring) if c.ring == INTEGERS else _expect_ring(c, ring, where)
        if isinstance(c, bool):
            raise ValueError(f"{where}: expected integer or [z0, z1] pair, got bool")
        if isinstance(c, int):
            return Scalar(ring, c, 0)
        if isinstance(c, (tuple, list)) and len(c) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in c):
            if ring.k is None:
                raise ValueError(f"{where}: [z0, z1] coordinates need a quadratic ring (declare k)")
            return Scalar(ring, c[0], c[1])
        raise ValueError(f"{where}: expected integer or [z0, z1] pair, got {c!r}")

    if not vectors:
        raise ValueError("ensemble must contain at least one vector")
    built = tuple(
        tuple(coerce(c, f"vectors[{i}][{j}]") for j, c in enumerate(v)) for i, v in enumerate(vectors)
    )
    dim = len(built[0])
    scale_s = coerce(scale, "scale")
    return Ensemble(ring=ring, dim=dim, vectors=built, scale=scale_s)


def _expect_ring(c: Scalar, ring: RingId, where: str) -> Scalar:
    if c.ring != ring:
        raise ValueError(f"{where}: scalar from {c.ring} does not match ensemble ring {ring}")
    return c
