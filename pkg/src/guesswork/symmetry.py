"""Geometric symmetries of exact point sets via Gram-matrix comparison.

A permutation of a point set is a geometric symmetry when some unitary
realizes it, and two tuples are unitarily related exactly when their Gram
matrices of pairwise inner products coincide.  Working with Gram matrices
keeps the unitary implicit, so everything below runs on ring arithmetic
alone (no division anywhere, including the determinant).

Two finders are provided: a brute-force walk over all N! permutations,
and a polynomial-time search that enumerates only ordered d-tuples of
points.  The key fact behind the fast finder is rigidity: once a symmetry
is pinned on a basis (a d-tuple with nonzero Gram determinant), the rest
of the permutation is forced, and it can be read off by sorting the whole
set in the total order induced by inner products against the basis.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .combinatorics import CombinationCursor, PermutationCursor
from .ensemble import Ensemble, Vector, vec_dot, vec_neg
from .errors import SpanningError
from .ring import Scalar, compare

Matrix = tuple[tuple[Scalar, ...], ...]


def gram(ensemble: Ensemble, order=None) -> Matrix:
    """Gram matrix of the tuple of ensemble vectors selected by `order`.

    `order` is a repetition-free sequence of ensemble indices (any
    length); identity order over the whole set when omitted.
    """
    if order is None:
        order = range(ensemble.n)
    order = tuple(order)
    if len(set(order)) != len(order):
        raise ValueError("order must be repetition-free")
    vs = []
    for idx in order:
        if not 0 <= idx < ensemble.n:
            raise ValueError(f"index {idx} out of range")
        vs.append(ensemble.vectors[idx])
    return tuple(tuple(vec_dot(a, b) for b in vs) for a in vs)


def det_division_free(m) -> Scalar:
    """Exact determinant using ring additions and multiplications only.

    Iterates X -> mu(X) A, where mu replaces the diagonal of X with
    negated partial traces and zeroes the strictly lower triangle; after
    n - 1 rounds the (0, 0) entry is the determinant up to sign.
    """
    m = tuple(tuple(row) for row in m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("matrix must be nonempty")
    ring = m[0][0].ring
    zero = Scalar(ring, 0, 0)
    x = m
    for _ in range(n - 1):
        mu = []
        for i in range(n):
            trace_below = zero
            for j in range(i + 1, n):
                trace_below = trace_below + x[j][j]
            mu.append(tuple(zero if j < i else (-trace_below if j == i else x[i][j]) for j in range(n)))
        x = tuple(
            tuple(
                functools.reduce(lambda acc, t: acc + t, (mu[i][t] * m[t][j] for t in range(n)))
                for j in range(n)
            )
            for i in range(n)
        )
    result = x[0][0]
    return result if n % 2 == 1 else -result


@dataclass(frozen=True)
class SymmetryGroup:
    """All index permutations of the set realizable by a unitary."""

    permutations: frozenset[tuple[int, ...]]
    centrally_symmetric: bool
    vertex_transitive: bool
    tuples_examined: int = 0

    @property
    def order(self) -> int:
        return len(self.permutations)


def is_centrally_symmetric(ensemble: Ensemble) -> bool:
    """Whether -v belongs to the set for every member v."""
    return all(ensemble.index_of(vec_neg(v)) is not None for v in ensemble.vectors)


def is_vertex_transitive(ensemble: Ensemble, group: SymmetryGroup) -> bool:
    """Whether the permutation group has a single orbit on the index set."""
    orbit = {p[0] for p in group.permutations}
    return len(orbit) == ensemble.n


def _finish_group(ensemble: Ensemble, perms: set[tuple[int, ...]], examined: int) -> SymmetryGroup:
    orbit = {p[0] for p in perms}
    return SymmetryGroup(
        permutations=frozenset(perms),
        centrally_symmetric=is_centrally_symmetric(ensemble),
        vertex_transitive=len(orbit) == ensemble.n,
        tuples_examined=examined,
    )


def symmetries_exhaustive(ensemble: Ensemble) -> SymmetryGroup:
    """Brute force: test every permutation against the reference Gram matrix."""
    n = ensemble.n
    base = gram(ensemble)
    perm = list(range(n))
    found: set[tuple[int, ...]] = set()
    examined = 0

    def check() -> None:
        nonlocal examined
        examined += 1
        for i in range(n):
            gi = base[perm[i]]
            bi = base[i]
            for j in range(i, n):
                if gi[perm[j]] != bi[j]:
                    return
        found.add(tuple(perm))

    check()
    cursor = PermutationCursor(n)
    while (step := cursor.next_swap()) is not None:
        i, j = step[0] - 1, step[1] - 1
        perm[i], perm[j] = perm[j], perm[i]
        check()
    return _finish_group(ensemble, found, examined)


def find_basis(ensemble: Ensemble) -> tuple[int, ...]:
    """Indices of d vectors whose Gram determinant is nonzero.

    Deterministic: the first spanning d-subset in combination-cursor
    order.  Raises SpanningError when the set does not span d dimensions.
    """
    d = ensemble.dim
    if d > ensemble.n:
        raise SpanningError(f"{ensemble.n} vectors cannot span {d} dimensions")
    cursor = CombinationCursor(ensemble.n, d)
    while True:
        candidate = tuple(i - 1 for i in cursor.selection)
        if not det_division_free(gram(ensemble, candidate)).is_zero():
            return candidate
        if cursor.next_combination() is None:
            raise SpanningError("not a spanning set: no d-subset has nonzero Gram determinant")


def e_order(ensemble: Ensemble, e) -> tuple[int, ...]:
    """Sort all N indices by inner products against the basis tuple e.

    v0 precedes v1 when the first basis vector with a nonzero inner
    product against v0 - v1 gives a negative one.  For a genuine basis
    this order is total, which the comparator asserts.
    """
    e = tuple(e)
    if det_division_free(gram(ensemble, e)).is_zero():
        raise SpanningError("ordering tuple is not a basis")
    base = gram(ensemble)

    def cmp(a: int, b: int) -> int:
        if a == b:
            return 0
        for ek in e:
            c = compare(base[ek][a], base[ek][b])
            if c != 0:
                return c
        raise AssertionError("basis failed to separate two distinct vectors")

    return tuple(sorted(range(ensemble.n), key=functools.cmp_to_key(cmp)))


def symmetries_fast(ensemble: Ensemble) -> SymmetryGroup:
    """Polynomial-time finder: pin candidate images of a reference basis.

    For each ordered d-tuple e' with the same Gram matrix as the
    reference basis e, the only possible symmetry maps the e-sorted tuple
    onto the e'-sorted tuple; it is accepted iff that tuple has the
    reference Gram matrix.  Runs through C(N, d) * d! candidates, each
    processed with O(N^2) ring comparisons.
    """
    n, d = ensemble.n, ensemble.dim
    e = find_basis(ensemble)
    v_ref = e_order(ensemble, e)
    base = gram(ensemble)

    def gram_equal_tuple(t0, t1) -> bool:
        for i in range(len(t0)):
            for j in range(i, len(t0)):
                if base[t0[i]][t0[j]] != base[t1[i]][t1[j]]:
                    return False
        return True

    found: set[tuple[int, ...]] = set()
    examined = 0
    combos = CombinationCursor(n, d)
    while True:
        members = tuple(i - 1 for i in combos.selection)
        arrangement = list(members)
        orderings = PermutationCursor(d)
        while True:
            examined += 1
            e_prime = tuple(arrangement)
            if gram_equal_tuple(e_prime, e):
                v_prime = e_order(ensemble, e_prime)
                if gram_equal_tuple(v_prime, v_ref):
                    sigma = [0] * n
                    for src, dst in zip(v_ref, v_prime):
                        sigma[src] = dst
                    found.add(tuple(sigma))
            step = orderings.next_swap()
            if step is None:
                break
            i, j = step[0] - 1, step[1] - 1
            arrangement[i], arrangement[j] = arrangement[j], arrangement[i]
        if combos.next_combination() is None:
            break
    return _finish_group(ensemble, found, examined)


def find_symmetries(ensemble: Ensemble, algorithm: str = "auto") -> SymmetryGroup:
    """Dispatch: the polynomial finder when the set spans, else brute force."""
    if algorithm == "exhaustive":
        return symmetries_exhaustive(ensemble)
    if algorithm == "fast":
        return symmetries_fast(ensemble)
    if algorithm != "auto":
        raise ValueError(f"unknown algorithm {algorithm!r}")
    try:
        return symmetries_fast(ensemble)
    except SpanningError:
        return symmetries_exhaustive(ensemble)
