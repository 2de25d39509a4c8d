"""Exact minimum guesswork of a qubit ensemble by ordered-tuple search.

The minimum guesswork of N Bloch vectors with uniform prior is

    (N + 1 - sqrt(g)/N) / 2,   g = max over orderings of |sum_i w_i v_i|^2,

with position weights w_i = 2i - N - 1 (1-based).  These weights are
antisymmetric about the middle of the tuple, w_{N+1-i} = -w_i, which both
makes the N = 1 value come out as exactly one query and lets central
symmetry cut the search space: reversing a tuple negates the weighted sum,
so tuples whose antipodal partners sit in mirrored positions can be
searched through half-tuples of pair representatives plus sign patterns.

Search modes, each a restriction of the ordering space that provably
contains a maximizer:

- "exhaustive":  all N! orderings.
- "transitive":  vertex-transitive sets; one vector pinned to the last
                 position; (N-1)! orderings.
- "central":     centrally symmetric sets; mirrored antipodal partners;
                 (N/2)! half-orderings times 2^(N/2) sign patterns.
                 A zero vector (its own antipode) sits at the middle
                 position, whose weight is zero.
- "symmetric":   both symmetries; one vector pinned last, its antipode
                 first; (N/2-1)! * 2^(N/2-1) states.

The weighted sum is maintained incrementally: a transposition of
positions i < j changes it by (w_j - w_i)(u_i - u_j) evaluated before the
swap, and a sign flip at half-position kk by -2 w_k u_k.  Both updates are
checked against direct recomputation in the test suite.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import symmetry as _symmetry
from .combinatorics import GrayCursor, PermutationCursor
from .ensemble import Ensemble, Vector, norm_sq, vec_add, vec_scale, vec_sub
from .errors import PreconditionError, SpanningError
from .ring import Scalar, _format_fixed, is_nonneg, ratio_to_decimal, sqrt_ratio_floor

_COMPILED_THRESHOLD = 100_000  # states below this are cheaper in pure Python


def weighted_sum(ensemble: Ensemble, order) -> Vector:
    """Direct evaluation of sum_i (2i - N - 1) v_{order[i]}, i 1-based.

    `order` must be a permutation of range(N).  This is the reference
    the incremental updates are tested against, so it must stay a plain
    recomputation.
    """
    n = ensemble.n
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of range(N)")
    zero = Scalar(ensemble.ring, 0, 0)
    acc: Vector = tuple(zero for _ in range(ensemble.dim))
    for pos, idx in enumerate(order, start=1):
        acc = vec_add(acc, vec_scale(2 * pos - n - 1, ensemble.vectors[idx]))
    return acc


@dataclass(frozen=True)
class _SearchPlan:
    """One restriction of the ordering space, ready to walk.

    slots[i] is the ensemble index of the vector owned by movable slot i;
    weights[i] is that slot's effective position weight.  The first mp
    slots are permutable (fewer than len(slots) only for worker branches);
    in signed mode every slot also carries a +-1 sign.  `base` is the
    constant contribution of pinned vectors.
    """

    ensemble: Ensemble
    label: str
    slots: tuple[int, ...]
    weights: tuple[int, ...]
    mp: int
    signed: bool
    base: Vector
    fix_index: int | None = None       # pinned last vector (transitive/symmetric)
    zero_index: int | None = None      # zero vector parked mid-tuple (central, odd N)
    antipodes: tuple[int, ...] = ()

    @property
    def state_count(self) -> int:
        return math.factorial(self.mp) * (2 ** len(self.slots) if self.signed else 1)

    def full_order(self, order, signs) -> tuple[int, ...]:
        """Materialize the complete N-tuple for a slot arrangement."""
        if not self.signed:
            out = list(order)
            if self.fix_index is not None:
                out.append(self.fix_index)
            return tuple(out)
        half = [
            idx if sg > 0 else self.antipodes[idx]
            for idx, sg in zip(order, signs)
        ]
        mirror = [self.antipodes[idx] for idx in reversed(half)]
        if self.fix_index is not None:
            return (self.antipodes[self.fix_index], *half, *mirror, self.fix_index)
        if self.zero_index is not None:
            return (*half, self.zero_index, *mirror)
        return (*half, *mirror)


class SearchState:
    """Mutable cursor position of one search: ordering, signs, running sum.

    The invariant maintained by apply_swap and apply_flip is that `wsum`
    always equals the direct weighted_sum of the materialized full tuple.
    Single-owner mutable; parallel searches use independent states.
    """

    def __init__(self, plan: _SearchPlan):
        self.plan = plan
        self.order: list[int] = list(plan.slots)
        self.signs: list[int] = [1] * len(plan.slots)
        ens = plan.ensemble
        wsum = plan.base
        for w, idx in zip(plan.weights, plan.slots):
            wsum = vec_add(wsum, vec_scale(w, ens.vectors[idx]))
        self.wsum: Vector = wsum
        self.best_g: Scalar | None = None
        self.best_order: tuple[int, ...] = ()
        self.states_examined = 0

    def _slot_vector(self, pos: int) -> Vector:
        v = self.plan.ensemble.vectors[self.order[pos]]
        return v if self.signs[pos] > 0 else vec_scale(-1, v)

    def full_order(self) -> tuple[int, ...]:
        return self.plan.full_order(self.order, self.signs)

    def record(self) -> None:
        g = norm_sq(self.wsum)
        self.states_examined += 1
        if self.best_g is None or g > self.best_g:
            self.best_g = g
            self.best_order = self.full_order()


def apply_swap(state: SearchState, i: int, j: int) -> SearchState:
    """Exchange slots i < j (1-based) and update the weighted sum in place."""
    if not 1 <= i < j <= len(state.order):
        raise ValueError(f"swap positions ({i}, {j}) out of range")
    a, b = i - 1, j - 1
    dw = state.plan.weights[b] - state.plan.weights[a]
    ua, ub = state._slot_vector(a), state._slot_vector(b)
    state.wsum = vec_add(state.wsum, vec_scale(dw, vec_sub(ua, ub)))
    state.order[a], state.order[b] = state.order[b], state.order[a]
    state.signs[a], state.signs[b] = state.signs[b], state.signs[a]
    return state


def apply_flip(state: SearchState, k: int) -> SearchState:
    """Flip the sign at half-position k (1-based); mirrored-pair update.

    A flip also negates the antipodal partner at the mirrored tuple
    position, which is why the slot weight is already doubled and the
    update is -2 w_k u_k rather than a bare single-position term.
    """
    if not state.plan.signed:
        raise ValueError("sign flips only apply to centrally symmetric search modes")
    if not 1 <= k <= len(state.order):
        raise ValueError(f"flip position {k} out of range")
    a = k - 1
    u = state._slot_vector(a)
    state.wsum = vec_add(state.wsum, vec_scale(-2 * state.plan.weights[a], u))
    state.signs[a] = -state.signs[a]
    return state


# -- plan construction ------------------------------------------------------


def _zero_vector(ens: Ensemble) -> Vector:
    zero = Scalar(ens.ring, 0, 0)
    return tuple(zero for _ in range(ens.dim))


def _plan_exhaustive(ens: Ensemble) -> _SearchPlan:
    n = ens.n
    weights = tuple(2 * (i + 1) - n - 1 for i in range(n))
    return _SearchPlan(
        ensemble=ens, label="exhaustive", slots=tuple(range(n)), weights=weights,
        mp=n, signed=False, base=_zero_vector(ens),
    )


def _plan_transitive(ens: Ensemble, fix: int = 0) -> _SearchPlan:
    n = ens.n
    slots = tuple(i for i in range(n) if i != fix)
    weights = tuple(2 * (i + 1) - n - 1 for i in range(n - 1))
    base = vec_scale(n - 1, ens.vectors[fix])  # w_N = N - 1
    return _SearchPlan(
        ensemble=ens, label="transitive", slots=slots, weights=weights,
        mp=n - 1, signed=False, base=base, fix_index=fix,
    )


def _antipode_table(ens: Ensemble) -> tuple[int, ...]:
    table = ens.antipode_map()
    missing = [i for i, a in enumerate(table) if a is None]
    if missing:
        raise PreconditionError("ensemble is not centrally symmetric")
    return tuple(table)  # type: ignore[arg-type]


def _pair_representatives(ens: Ensemble, antipodes, exclude=()) -> tuple[int, ...]:
    reps = []
    taken = set(exclude)
    for i in range(ens.n):
        if i in taken:
            continue
        taken.add(i)
        taken.add(antipodes[i])
        reps.append(i)
    return tuple(reps)


def _plan_central(ens: Ensemble) -> _SearchPlan:
    n = ens.n
    antipodes = _antipode_table(ens)
    zero = ens.zero_index()
    reps = _pair_representatives(ens, antipodes, exclude=() if zero is None else (zero,))
    # half-position i of the full tuple carries weight 2 w_i
    weights = tuple(2 * (2 * (i + 1) - n - 1) for i in range(len(reps)))
    return _SearchPlan(
        ensemble=ens, label="central", slots=reps, weights=weights,
        mp=len(reps), signed=True, base=_zero_vector(ens),
        zero_index=zero, antipodes=antipodes,
    )


def _plan_symmetric(ens: Ensemble, fix: int = 0) -> _SearchPlan:
    n = ens.n
    if n % 2 != 0:
        raise PreconditionError("paired search needs an even number of vectors")
    if ens.zero_index() is not None:
        raise PreconditionError("paired search excludes the zero vector")
    antipodes = _antipode_table(ens)
    reps = _pair_representatives(ens, antipodes, exclude=(fix, antipodes[fix]))
    # half-position i sits at full position i + 1; weight doubled by mirroring
    weights = tuple(2 * (2 * (i + 1) + 1 - n) for i in range(len(reps)))
    base = vec_scale(2 * (n - 1), ens.vectors[fix])  # w_N - w_1 = 2(N - 1)
    return _SearchPlan(
        ensemble=ens, label="symmetric", slots=reps, weights=weights,
        mp=len(reps), signed=True, base=base,
        fix_index=fix, antipodes=antipodes,
    )


_PLAN_BUILDERS = {
    "exhaustive": _plan_exhaustive,
    "transitive": _plan_transitive,
    "central": _plan_central,
    "symmetric": _plan_symmetric,
}


def search_state(ensemble: Ensemble, mode: str = "exhaustive") -> SearchState:
    """A fresh SearchState for driving apply_swap/apply_flip directly."""
    try:
        builder = _PLAN_BUILDERS[mode]
    except KeyError:
        raise ValueError(f"unknown search mode {mode!r}") from None
    return SearchState(builder(ensemble))


# -- result -----------------------------------------------------------------


@dataclass(frozen=True)
class GuessworkResult:
    """Exact outcome: g as the unreduced ring fraction raw/scale.

    `raw` is the maximum of |<v>|^2 over stored (unnormalized) vectors;
    dividing by the ensemble scale gives the table value g.  The minimum
    expected number of queries is (N + 1 - sqrt(g)/N) / 2.
    """

    raw: Scalar
    scale: Scalar
    n: int
    witness: tuple[int, ...]
    algorithm: str = "direct"
    engine: str = "python"
    states_examined: int = 0

    def g_string(self) -> str:
        if self.scale.z0 == 1 and self.scale.z1 == 0:
            return _paren(self.raw)
        return f"{_paren(self.raw)}/{_paren(self.scale)}"

    def g_decimal(self, digits: int = 4) -> str:
        return ratio_to_decimal(self.raw, self.scale, digits)

    def gmin_exact(self) -> str:
        return f"({self.n + 1} - sqrt({self.g_string()})/{self.n})/2"

    def gmin_decimal(self, digits: int = 4) -> str:
        """Correctly rounded decimal of (N + 1 - sqrt(g)/N)/2.

        Uses only integer arithmetic: with p = 10^digits the rounded value
        is floor((N(N+1)p + N - p sqrt(g)) / 2N), and the inner floor of
        p*sqrt(g) comes from exact bracketing.
        """
        if digits < 1:
            raise ValueError("digits must be >= 1")
        p = 10**digits
        a = self.n * ((self.n + 1) * p + 1)
        fl, exact = sqrt_ratio_floor(p, self.raw, self.scale)
        ceil_y = fl if exact else fl + 1
        return _format_fixed((a - ceil_y) // (2 * self.n), digits)


def _paren(s: Scalar) -> str:
    text = str(s)
    return f"({text})" if ("+" in text[1:] or "-" in text[1:]) else text


def assemble_result(
    raw_g: Scalar,
    scale: Scalar,
    n: int,
    witness: tuple[int, ...],
    *,
    algorithm: str = "direct",
    engine: str = "python",
    states_examined: int = 0,
) -> GuessworkResult:
    if not is_nonneg(raw_g):
        raise ValueError("raw guesswork objective must be >= 0")
    if not is_nonneg(scale) or scale.is_zero():
        raise ValueError("scale must be > 0")
    return GuessworkResult(
        raw=raw_g, scale=scale, n=n, witness=tuple(witness),
        algorithm=algorithm, engine=engine, states_examined=states_examined,
    )


# -- engines ------------------------------------------------------------------


def _python_search(plan: _SearchPlan) -> tuple[Scalar, tuple[int, ...], int]:
    state = SearchState(plan)
    cursor = PermutationCursor(plan.mp)
    state.record()
    while True:
        if plan.signed and state.order:
            for k in GrayCursor(len(state.order)):
                apply_flip(state, k)
                state.record()
        step = cursor.next_swap()
        if step is None:
            break
        apply_swap(state, step[0], step[1])
        state.record()
    assert state.best_g is not None
    return state.best_g, state.best_order, state.states_examined


def _search_branch(plan: _SearchPlan, mode: str):
    """Run one plan; mode is 'python', 'compiled' or 'try-compiled'."""
    if mode != "python":
        from . import _accel

        outcome = _accel.try_run_plan(plan)
        if outcome is not None:
            return (*outcome, "compiled")
        if mode == "compiled":
            raise PreconditionError(
                "coordinates too large for the compiled engine; use engine='python'"
            )
    return (*_python_search(plan), "python")


def _run_plan(plan: _SearchPlan, engine: str, workers: int):
    if engine == "auto":
        mode = "try-compiled" if plan.state_count > _COMPILED_THRESHOLD else "python"
    elif engine in ("python", "compiled"):
        mode = engine
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if workers > 1 and len(plan.slots) >= 2 and plan.state_count > _COMPILED_THRESHOLD:
        branches = []
        slots = plan.slots
        for i in range(len(slots)):
            rotated = slots[:i] + slots[i + 1 :] + (slots[i],)
            branches.append(replace(plan, slots=rotated, mp=len(slots) - 1))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_search_branch, branches, [mode] * len(branches)))
        best, witness, states, used = outcomes[0]
        for raw, wit, st, _ in outcomes[1:]:
            states += st
            if raw > best or (raw == best and wit < witness):
                best, witness = raw, wit
        return best, witness, states, used
    return _search_branch(plan, mode)


# -- public entry points --------------------------------------------------------


def _finish(plan: _SearchPlan, engine: str, workers: int) -> GuessworkResult:
    raw, witness, states, used = _run_plan(plan, engine, workers)
    return assemble_result(
        raw, plan.ensemble.scale, plan.ensemble.n, witness,
        algorithm=plan.label, engine=used, states_examined=states,
    )


def compute_guesswork(
    ensemble: Ensemble,
    algorithm: str = "auto",
    *,
    engine: str = "auto",
    workers: int = 1,
) -> GuessworkResult:
    """Exact guesswork via the requested (or auto-detected) search mode.

    "auto" detects central symmetry and vertex transitivity and picks the
    strongest applicable restriction; every mode returns the identical
    exact value.
    """
    if algorithm == "auto":
        plan = _auto_plan(ensemble)
    elif algorithm == "symmetric":
        _require_symmetric(ensemble, assume=False)
        plan = _plan_symmetric(ensemble)
    elif algorithm in _PLAN_BUILDERS:
        plan = _PLAN_BUILDERS[algorithm](ensemble)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return _finish(plan, engine, workers)


def guesswork_exhaustive(ensemble: Ensemble, *, engine: str = "auto", workers: int = 1) -> GuessworkResult:
    """Search all N! orderings."""
    return _finish(_plan_exhaustive(ensemble), engine, workers)


def guesswork_symmetric(
    ensemble: Ensemble,
    *,
    assume_symmetric: bool = False,
    engine: str = "auto",
    workers: int = 1,
) -> GuessworkResult:
    """Paired search for centrally symmetric, vertex-transitive ensembles.

    Verifies both symmetries unless assume_symmetric is set; either way
    the returned value equals the exhaustive search exactly.
    """
    _require_symmetric(ensemble, assume=assume_symmetric)
    return _finish(_plan_symmetric(ensemble), engine, workers)


def _require_symmetric(ensemble: Ensemble, assume: bool) -> None:
    if ensemble.n % 2 != 0:
        raise PreconditionError("paired search needs an even number of vectors")
    if ensemble.zero_index() is not None:
        raise PreconditionError("paired search excludes the zero vector")
    if assume:
        return
    if not _symmetry.is_centrally_symmetric(ensemble):
        raise PreconditionError("ensemble is not centrally symmetric")
    group = _symmetry.find_symmetries(ensemble)
    if not _symmetry.is_vertex_transitive(ensemble, group):
        raise PreconditionError("ensemble is not vertex transitive")


def _auto_plan(ensemble: Ensemble) -> _SearchPlan:
    cs = _symmetry.is_centrally_symmetric(ensemble)
    vt = False
    try:
        group = _symmetry.symmetries_fast(ensemble)
        vt = _symmetry.is_vertex_transitive(ensemble, group)
    except SpanningError:
        # brute-force group finding is factorial; only fall back when tiny
        if ensemble.n <= 8:
            group = _symmetry.symmetries_exhaustive(ensemble)
            vt = _symmetry.is_vertex_transitive(ensemble, group)
    if cs and vt and ensemble.n % 2 == 0 and ensemble.zero_index() is None:
        return _plan_symmetric(ensemble)
    if cs:
        return _plan_central(ensemble)
    if vt:
        return _plan_transitive(ensemble)
    return _plan_exhaustive(ensemble)
