import random
from decimal import Decimal, getcontext

import pytest

import guesswork as gw

getcontext().prec = 130


def scalar_value(s: gw.Scalar) -> Decimal:
    """High-precision decimal value of a scalar, for float-style oracles."""
    if s.ring.k is None:
        return Decimal(s.z0)
    return Decimal(s.z0) + Decimal(s.z1) * Decimal(s.ring.k).sqrt()


def random_scalar(rng: random.Random, k=None, span=1000) -> gw.Scalar:
    if k is None:
        return gw.integer(rng.randint(-span, span))
    return gw.quadratic(k, rng.randint(-span, span), rng.randint(-span, span))


def max_scalar(values):
    best = values[0]
    for v in values[1:]:
        if gw.compare(v, best) > 0:
            best = v
    return best


def random_ensemble(rng: random.Random, n: int, k=None, dim=3, span=2) -> gw.Ensemble:
    """n distinct random vectors; scale set to the largest squared norm."""
    ring = gw.INTEGERS if k is None else gw.RingId(k)
    while (2 * span + 1) ** dim <= n:  # enough room for n distinct draws
        span += 1
    seen = set()
    while len(seen) < n:
        if k is None:
            seen.add(tuple(gw.integer(rng.randint(-span, span)) for _ in range(dim)))
        else:
            seen.add(
                tuple(
                    gw.Scalar(ring, rng.randint(-span, span), rng.randint(-1, 1))
                    for _ in range(dim)
                )
            )
    vectors = sorted(seen, key=str)
    norms = [gw.norm_sq(v) for v in vectors]
    scale = max_scalar(norms)
    if scale.is_zero():
        scale = gw.Scalar(ring, 1, 0)
    return gw.Ensemble(ring=ring, dim=dim, vectors=tuple(vectors), scale=scale)


def random_box_ensemble(rng: random.Random, k=None, with_zero=False) -> gw.Ensemble:
    """Sign-orbit of one vector: centrally symmetric and vertex transitive.

    Vertices are all sign patterns over the nonzero coordinates of a
    random template, i.e. a (possibly degenerate) box; axis reflections
    act transitively on them.
    """
    ring = gw.INTEGERS if k is None else gw.RingId(k)
    axes = rng.randint(1, 3)
    template = [0, 0, 0]
    picks = rng.sample(range(3), axes)
    for ax in picks:
        template[ax] = rng.randint(1, 3)
    coords = []
    for c in template:
        if k is not None and c and rng.random() < 0.5:
            coords.append(gw.Scalar(ring, c, rng.randint(0, 1)))
        else:
            coords.append(gw.Scalar(ring, c, 0))
    zero = gw.Scalar(ring, 0, 0)
    vertices = set()
    for mask in range(2**3):
        vertices.add(tuple((-c if (mask >> i) & 1 else c) for i, c in enumerate(coords)))
    vertices = sorted(vertices, key=str)
    scale = gw.norm_sq(vertices[0])
    if with_zero:
        vertices = list(vertices) + [tuple(zero for _ in range(3))]
    return gw.Ensemble(ring=ring, dim=3, vectors=tuple(vertices), scale=scale)


def random_spanning_ensemble(rng: random.Random, n: int, dim: int, k=None) -> gw.Ensemble:
    for _ in range(200):
        ens = random_ensemble(rng, n, k=k, dim=dim, span=2)
        try:
            gw.find_basis(ens)
            return ens
        except gw.SpanningError:
            continue
    raise RuntimeError("failed to draw a spanning set")


def compose(p, q):
    """Permutation composition: (p after q)."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@pytest.fixture
def rng():
    return random.Random(20260810)
