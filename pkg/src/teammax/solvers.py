"""Solvers and bounds for the team-maxmin value.

Exact solution is NP-hard and the optimum can be irrational, so everything
here reports certified brackets instead of pretending to be exact:

* correlated_team_maxmin: LP over joint team actions, an upper bound.
* reconstruct_mixed / reconstruct_best_pivot: independent profile recovered
  from the correlated optimum, a lower bound with a multiplicative
  guarantee.
* support_enumeration: additive epsilon guarantee by enumerating discretized
  mixtures (exponential work, instrumented and budget-capped).
* iterated_lp: alternating best-response LP ascent with random restarts,
  a monotone anytime lower bound.
* global_optimize: anytime lower/upper bracket combining the above with a
  branch-and-bound refinement of the correlated relaxation.
* grid_oracle: brute-force grid search with a certified additive error,
  for tiny games only.
"""

from __future__ import annotations

import heapq
import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .game import (
    CapacityError,
    JointDistribution,
    MixedStrategy,
    TeamGame,
    TeamProfile,
    per_adversary_utilities,
    team_value,
    to_joint_game,
    uniform_profile,
)
from .lp import (
    LinearProgram,
    member_payoff_matrix,
    solve_lp,
    solve_maxmin,
)
from .rng import SplitMix64

DEFAULT_TIMEOUT = 3600.0
BOUND_SLACK = 1e-7


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Certified bracket [lower_bound, upper_bound] for the team-maxmin
    value, with the profile realizing the lower bound.

    traces holds, per restart of an iterative solver, the sequence of
    accepted objective values (non-decreasing within each restart).
    """

    lower_bound: float
    upper_bound: float
    witness: TeamProfile | None
    iterations: int
    restarts_used: int
    wall_time: float
    converged: bool
    traces: tuple[tuple[float, ...], ...] = ()

    def __post_init__(self):
        if self.lower_bound > self.upper_bound + BOUND_SLACK:
            raise ValueError(
                f"lower bound {self.lower_bound} exceeds upper bound "
                f"{self.upper_bound}"
            )
        if self.iterations < 0 or self.restarts_used < 0 or self.wall_time < 0:
            raise ValueError("counters must be nonnegative")


@dataclass(frozen=True, eq=False)
class OracleEstimate:
    """Brute-force estimate with one-sided certification: the true
    team-maxmin value lies in [value, value + error_bound]."""

    value: float
    error_bound: float
    witness: TeamProfile
    resolution: int
    evaluations: int

    @property
    def certified_interval(self) -> tuple[float, float]:
        return (self.value, self.value + self.error_bound)


# ---------------------------------------------------------------------------
# correlated relaxation and reconstruction


def correlated_team_maxmin(game: TeamGame) -> tuple[JointDistribution, float]:
    """Exact maxmin over correlated (joint) team strategies.

    Reduces the game to a two-player zero-sum matrix game whose rows are
    joint team actions and solves the resulting LP. The value dominates the
    independent team-maxmin value.
    """
    value, probs = solve_maxmin(to_joint_game(game))
    dist = JointDistribution(game.team_sizes, np.maximum(probs, 0.0))
    return dist, value


def reconstruct_mixed(
    dist: JointDistribution, game: TeamGame, pivot: int
) -> TeamProfile:
    """Independent profile derived from a joint distribution.

    The pivot member keeps her exact marginal; every other member plays
    uniformly on her marginal's support. For nonnegative payoffs the result
    guarantees at least the joint strategy's worst-case value divided by the
    product of the non-pivot support sizes (hence by m^(n-2))."""
    if dist.team_sizes != game.team_sizes:
        raise ValueError("joint distribution does not match the game")
    if not 0 <= pivot < game.num_team_members:
        raise ValueError(f"pivot {pivot} out of range")
    strategies = []
    for i in range(game.num_team_members):
        if i == pivot:
            strategies.append(MixedStrategy(i, dist.marginal(i)))
        else:
            support = dist.support(i)
            probs = np.zeros(game.team_sizes[i])
            probs[support] = 1.0 / support.size
            strategies.append(MixedStrategy(i, probs))
    return TeamProfile(tuple(strategies))


def _best_reconstruction(
    game: TeamGame, dist: JointDistribution
) -> tuple[float, TeamProfile]:
    best_value = -math.inf
    best_profile = None
    for pivot in range(game.num_team_members):
        profile = reconstruct_mixed(dist, game, pivot)
        value = team_value(game, profile).value
        if value > best_value:
            best_value, best_profile = value, profile
    return best_value, best_profile


def reconstruct_best_pivot(game: TeamGame) -> SolveReport:
    """Correlated LP once, then the best reconstruction over all pivots.

    Ties between pivots keep the lowest pivot index.
    """
    start = time.perf_counter()
    dist, correlated_value = correlated_team_maxmin(game)
    best_value, best_profile = _best_reconstruction(game, dist)
    return SolveReport(
        lower_bound=best_value,
        upper_bound=max(correlated_value, best_value),
        witness=best_profile,
        iterations=game.num_team_members,
        restarts_used=0,
        wall_time=time.perf_counter() - start,
        converged=True,
    )


# ---------------------------------------------------------------------------
# support enumeration


@dataclass(frozen=True)
class EnumerationParams:
    """Discretization of the additive-epsilon enumeration.

    Every member's mixture is restricted to action multisets of cardinality
    multiset_size (probabilities in units of 1/multiset_size); the size
    grows with ln(m)/(2 epsilon^2) where m is the largest team-member action
    count.
    """

    epsilon: float
    multiset_size: int

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if self.multiset_size < 1:
            raise ValueError("multiset size must be at least 1")

    @classmethod
    def for_game(cls, game: TeamGame, epsilon: float) -> "EnumerationParams":
        if not 0.0 < epsilon <= 1.0:
            raise ValueError(f"epsilon must be in (0, 1], got {epsilon}")
        m = game.max_team_actions
        size = max(1, math.ceil(math.log(m) / (2.0 * epsilon * epsilon)))
        return cls(epsilon=epsilon, multiset_size=size)

    def candidates_per_member(self, num_actions: int) -> int:
        return math.comb(num_actions + self.multiset_size - 1, self.multiset_size)

    def total_candidates(self, game: TeamGame) -> int:
        total = 1
        for m in game.team_sizes:
            total *= self.candidates_per_member(m)
        return total


def _require_normalized(game: TeamGame, who: str) -> None:
    lo = float(game.team_utility.min())
    hi = float(game.team_utility.max())
    if lo < -1e-12 or hi > 1.0 + 1e-12:
        raise ValueError(
            f"{who} requires payoffs normalized to [0, 1], "
            f"got range [{lo}, {hi}]; apply normalize_payoffs first"
        )


def support_enumeration(
    game: TeamGame,
    epsilon: float,
    budget: int | None = None,
    upper_bound: float | None = None,
) -> SolveReport:
    """Additive epsilon-approximation by enumerating discretized mixtures.

    Requires payoffs in [0, 1]. For each team member, enumerates all action
    multisets of the prescribed cardinality in lexicographic order and takes
    the candidate profile with the best exact worst-case value; a pure
    adversary minimizer suffices for the inner evaluation. The full cross
    product is streamed, never materialized. When it runs to completion the
    lower bound is within epsilon of the team-maxmin value.

    budget caps the number of candidate profiles visited; hitting the cap
    reports converged=False with the best bracket so far. iterations in the
    report is the exact number of candidates visited.
    """
    _require_normalized(game, "support_enumeration")
    if budget is not None and budget < 1:
        raise ValueError("budget must be at least 1")
    start = time.perf_counter()
    params = EnumerationParams.for_game(game, epsilon)
    size = params.multiset_size
    member_mixtures = []
    for m in game.team_sizes:
        rows = [
            np.bincount(combo, minlength=m).astype(np.float64) / size
            for combo in itertools.combinations_with_replacement(range(m), size)
        ]
        member_mixtures.append(np.asarray(rows))
    tensor = game.team_utility
    best_value = -math.inf
    best_combo = None
    visited = 0
    exhausted = True
    for combo in itertools.product(*(range(len(g)) for g in member_mixtures)):
        if budget is not None and visited >= budget:
            exhausted = False
            break
        visited += 1
        out = tensor
        for i, row in enumerate(combo):
            out = np.tensordot(member_mixtures[i][row], out, axes=([0], [0]))
        value = float(out.min())
        if value > best_value:
            best_value = value
            best_combo = combo
    witness = TeamProfile(
        tuple(
            MixedStrategy(i, member_mixtures[i][row])
            for i, row in enumerate(best_combo)
        )
    )
    cap = 1.0 if upper_bound is None else min(1.0, upper_bound)
    return SolveReport(
        lower_bound=best_value,
        upper_bound=cap,
        witness=witness,
        iterations=visited,
        restarts_used=0,
        wall_time=time.perf_counter() - start,
        converged=exhausted,
    )


# ---------------------------------------------------------------------------
# iterated LP ascent


def _random_profile(game: TeamGame, rng: SplitMix64) -> TeamProfile:
    return TeamProfile(
        tuple(
            MixedStrategy(i, rng.simplex_point(m))
            for i, m in enumerate(game.team_sizes)
        )
    )


def iterated_lp(
    game: TeamGame,
    init: TeamProfile | str = "random",
    restarts: int = 1,
    seed: int = 0,
    timeout: float | None = DEFAULT_TIMEOUT,
    max_rounds: int = 1000,
    improvement_tol: float = 1e-9,
) -> SolveReport:
    """Alternating best-response LP ascent over team members.

    Per round, every member's best worst-case response against the fixed
    others is solved as an LP; only the member with the largest achievable
    value is replaced (ties to the lowest member index), so the current
    value never decreases. A round that cannot improve the value by
    improvement_tol leaves the profile untouched and ends the restart.

    init selects the first restart's profile: "uniform", "random", or an
    explicit TeamProfile. Later restarts always start from a random point
    of the flat simplex distribution, drawn from per-restart streams spawned
    off `seed`, so results do not depend on scheduling.

    The report's lower bound is the best value across restarts; the trivial
    upper bound is the largest payoff entry. iterations counts rounds summed
    over restarts. converged is False if the timeout cut work short or some
    restart hit max_rounds while still improving.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    if isinstance(init, str) and init not in ("random", "uniform"):
        raise ValueError(f"unknown init {init!r}")
    start = time.perf_counter()
    deadline = math.inf if timeout is None else start + timeout
    master = SplitMix64(seed)
    num_members = game.num_team_members
    best_value = -math.inf
    best_profile = None
    traces: list[tuple[float, ...]] = []
    total_rounds = 0
    restarts_done = 0
    all_converged = True
    timed_out = False
    for r in range(restarts):
        rng = master.spawn(r)
        if r == 0 and isinstance(init, TeamProfile):
            profile = init
        elif r == 0 and init == "uniform":
            profile = uniform_profile(game)
        else:
            profile = _random_profile(game, rng)
        value = team_value(game, profile).value
        trace = [value]
        settled = False
        for _ in range(max_rounds):
            if time.perf_counter() > deadline:
                timed_out = True
                break
            total_rounds += 1
            round_best = -math.inf
            round_member = -1
            round_mixture = None
            for i in range(num_members):
                v, x = solve_maxmin(member_payoff_matrix(game, profile, i))
                if v > round_best:
                    round_best, round_member = v, i
                    round_mixture = x
            if round_best - value < improvement_tol:
                settled = True
                break
            strategies = list(profile)
            strategies[round_member] = MixedStrategy(
                round_member, np.maximum(round_mixture, 0.0)
            )
            profile = TeamProfile(tuple(strategies))
            value = round_best
            trace.append(value)
        traces.append(tuple(trace))
        restarts_done += 1
        if value > best_value:
            best_value, best_profile = value, profile
        if not settled:
            all_converged = False
        if timed_out:
            break
    converged = all_converged and not timed_out and restarts_done == restarts
    return SolveReport(
        lower_bound=best_value,
        upper_bound=max(float(game.team_utility.max()), best_value),
        witness=best_profile,
        iterations=total_rounds,
        restarts_used=restarts_done,
        wall_time=time.perf_counter() - start,
        converged=converged,
        traces=tuple(traces),
    )


# ---------------------------------------------------------------------------
# certified brute-force oracle


def _compositions(total: int, parts: int):
    """All nonnegative integer vectors of the given length summing to total,
    in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _rounding_constant(m: int) -> float:
    """max over integer r in [0, m-1] of 2 r (m - r) / m; the grid with k
    steps is within this / k in L1 distance of any point of the simplex."""
    best = 0.0
    for r in (m // 2, (m + 1) // 2):
        r = min(r, m - 1)
        best = max(best, 2.0 * r * (m - r) / m)
    return best


def grid_oracle(
    game: TeamGame,
    target_error: float,
    max_evaluations: int = 20_000_000,
) -> OracleEstimate:
    """Exhaustive search over per-member probability grids.

    Requires payoffs in [0, 1]. Evaluates every combination of grid mixtures
    (k equal steps per member) exactly, so the best value found is a valid
    lower bound; rounding any optimal profile onto the grid loses at most
    the certified error, so the true value lies within
    [value, value + error_bound] with error_bound <= target_error.

    The step count k is rounded up to a multiple of lcm(team sizes) when
    small, which puts the uniform profile on the grid. Intended for tiny
    games; anything needing more than max_evaluations combinations raises
    CapacityError.
    """
    _require_normalized(game, "grid_oracle")
    if target_error <= 0:
        raise ValueError("target_error must be positive")
    team_sizes = game.team_sizes
    members = len(team_sizes)
    constants = [_rounding_constant(m) for m in team_sizes]
    worst = max(constants)
    if worst == 0.0:
        k = 1
        error_bound = 0.0
    else:
        k = math.ceil(members * worst / target_error)
        scale = math.lcm(*team_sizes)
        if scale <= 512:
            k = ((k + scale - 1) // scale) * scale
        error_bound = members * worst / k
    counts = [math.comb(k + m - 1, m - 1) for m in team_sizes]
    total = 1
    for c in counts:
        total *= c
    if total > max_evaluations:
        raise CapacityError(
            f"{total} grid combinations exceed the cap of {max_evaluations}"
        )
    if max(c * m for c, m in zip(counts, team_sizes)) > 12_000_000:
        raise CapacityError("a single member grid is too large to materialize")
    grids = [
        np.asarray(list(_compositions(k, m)), dtype=np.float64) / k
        for m in team_sizes
    ]
    # contract members other than the first, leaving axes
    # (m_0, m_adv, P_last, ..., P_1)
    folded = np.asarray(game.team_utility)
    for i in range(members - 1, 0, -1):
        folded = np.tensordot(folded, grids[i].T, axes=([i], [0]))
    trailing = int(np.prod(folded.shape[1:])) if folded.ndim > 1 else 1
    chunk_rows = max(1, 4_000_000 // max(trailing, 1))
    best_value = -math.inf
    best_index: tuple[int, ...] = ()
    first = grids[0]
    for offset in range(0, first.shape[0], chunk_rows):
        block = first[offset : offset + chunk_rows]
        values = np.tensordot(block, folded, axes=([1], [0]))
        # axis 1 is the adversary; minimize over it, then maximize the rest
        worst_case = values.min(axis=1)
        flat = int(np.argmax(worst_case))
        value = float(worst_case.reshape(-1)[flat])
        if value > best_value:
            best_value = value
            local = np.unravel_index(flat, worst_case.shape)
            best_index = (offset + int(local[0]),) + tuple(
                int(x) for x in local[1:]
            )
    # trailing axes run over members (last, ..., 1)
    choice = [0] * members
    choice[0] = best_index[0]
    for pos, member in enumerate(range(members - 1, 0, -1)):
        choice[member] = best_index[1 + pos]
    witness = TeamProfile(
        tuple(MixedStrategy(i, grids[i][choice[i]]) for i in range(members))
    )
    return OracleEstimate(
        value=best_value,
        error_bound=error_bound,
        witness=witness,
        resolution=k,
        evaluations=total,
    )


# ---------------------------------------------------------------------------
# global anytime bounds


def _box_products(parts: list[np.ndarray]) -> np.ndarray:
    out = np.ones(1)
    for vec in parts:
        out = np.multiply.outer(out, vec).reshape(-1)
    return out


def _box_bound_lp(matrix: np.ndarray, lows: np.ndarray, highs: np.ndarray) -> LinearProgram:
    """Correlated maxmin restricted to joint probabilities inside the box.

    Product strategies drawn from the per-member boxes have joint action
    probabilities between the products of the interval endpoints, so this
    LP upper-bounds the best independent profile inside the box.
    """
    rows, cols = matrix.shape
    nvar = rows + 1
    objective = np.zeros(nvar)
    objective[-1] = 1.0
    blocks = [np.zeros((cols, nvar))]
    blocks[0][:, :rows] = -matrix.T
    blocks[0][:, rows] = 1.0
    rhs = [np.zeros(cols)]
    upper = np.zeros((rows, nvar))
    upper[:, :rows] = np.eye(rows)
    blocks.append(upper)
    rhs.append(highs)
    mask = lows > 0.0
    if np.any(mask):
        lower = np.zeros((int(mask.sum()), nvar))
        lower[:, :rows] = -np.eye(rows)[mask]
        blocks.append(lower)
        rhs.append(-lows[mask])
    a_eq = np.zeros((1, nvar))
    a_eq[0, :rows] = 1.0
    nonneg = np.ones(nvar, dtype=bool)
    nonneg[-1] = False
    return LinearProgram(
        objective,
        np.vstack(blocks),
        np.concatenate(rhs),
        a_eq,
        np.ones(1),
        nonneg,
    )


def _tighten_box(los: list[np.ndarray], his: list[np.ndarray]) -> bool:
    """Intersect interval boxes with the probability simplex; returns False
    when the intersection is empty."""
    for _ in range(2):
        for lo, hi in zip(los, his):
            np.minimum(hi, 1.0 - (lo.sum() - lo), out=hi)
            np.maximum(lo, 1.0 - (hi.sum() - hi), out=lo)
            if np.any(lo > hi + 1e-12):
                return False
            if lo.sum() > 1.0 + 1e-9 or hi.sum() < 1.0 - 1e-9:
                return False
    return True


def _box_probe(game: TeamGame, probs: np.ndarray) -> TeamProfile | None:
    """Round a joint distribution to its product-of-marginals profile."""
    shaped = np.maximum(probs, 0.0).reshape(game.team_sizes)
    strategies = []
    for i in range(game.num_team_members):
        axes = tuple(j for j in range(game.num_team_members) if j != i)
        marginal = shaped.sum(axis=axes)
        total = marginal.sum()
        if total <= 0.0:
            return None
        strategies.append(MixedStrategy(i, marginal / total))
    return TeamProfile(tuple(strategies))


def global_optimize(
    game: TeamGame,
    accuracy: float = 1e-6,
    budget: float = DEFAULT_TIMEOUT,
    seed: int = 0,
    restarts: int = 8,
    max_nodes: int = 20_000,
    max_depth: int = 64,
) -> SolveReport:
    """Anytime bracket of the team-maxmin value for normalized games.

    Always computes the correlated upper bound and its best-pivot
    reconstruction (budget 0 returns exactly those). With remaining budget
    it sharpens the lower bound by iterated LP ascent, then refines the
    upper bound by best-first branch and bound: the team strategy box is
    split on the widest coordinate interval and each box is bounded by the
    correlated relaxation restricted to it, pruning boxes that cannot beat
    the incumbent. Bounds are valid whenever it stops; converged means the
    bracket width reached `accuracy`.
    """
    _require_normalized(game, "global_optimize")
    if accuracy <= 0:
        raise ValueError("accuracy must be positive")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    start = time.perf_counter()
    deadline = start + budget
    dist, correlated_value = correlated_team_maxmin(game)
    lower, witness = _best_reconstruction(game, dist)
    upper = max(correlated_value, lower)
    nodes = 0
    restarts_used = 0

    def done() -> bool:
        return upper - lower <= accuracy or time.perf_counter() > deadline

    if not done():
        remaining = deadline - time.perf_counter()
        ascent = iterated_lp(
            game,
            restarts=restarts,
            seed=seed,
            timeout=max(remaining * 0.5, 0.0),
        )
        restarts_used = ascent.restarts_used
        if ascent.lower_bound > lower:
            lower, witness = ascent.lower_bound, ascent.witness

    if not done():
        matrix = to_joint_game(game)
        members = game.num_team_members
        root_los = [np.zeros(m) for m in game.team_sizes]
        root_his = [np.ones(m) for m in game.team_sizes]
        counter = itertools.count()
        heap = [(-upper, next(counter), 0, root_los, root_his)]
        resolved = lower
        while heap and nodes < max_nodes:
            top_bound = -heap[0][0]
            upper = min(upper, max(lower, max(top_bound, resolved)))
            if upper - lower <= accuracy or time.perf_counter() > deadline:
                break
            _, _, depth, los, his = heapq.heappop(heap)
            if top_bound <= lower:
                continue
            nodes += 1
            # split the widest interval, ties to the lowest member and action
            widths = [hi - lo for lo, hi in zip(los, his)]
            member = max(range(members), key=lambda i: widths[i].max())
            action = int(np.argmax(widths[member]))
            width = float(widths[member][action])
            if width <= max(accuracy * 1e-3, 1e-12) or depth >= max_depth * members:
                resolved = max(resolved, top_bound)
                continue
            mid = los[member][action] + width / 2.0
            for half in (0, 1):
                child_los = [arr.copy() for arr in los]
                child_his = [arr.copy() for arr in his]
                if half == 0:
                    child_his[member][action] = mid
                else:
                    child_los[member][action] = mid
                if not _tighten_box(child_los, child_his):
                    continue
                lp = _box_bound_lp(
                    matrix,
                    _box_products(child_los),
                    _box_products(child_his),
                )
                solution = solve_lp(lp)
                if solution.status != "optimal":
                    continue
                bound = solution.objective_value
                probe = _box_probe(game, solution.variable_values[:-1])
                if probe is not None:
                    probe_value = team_value(game, probe).value
                    if probe_value > lower:
                        lower, witness = probe_value, probe
                if bound > lower:
                    heapq.heappush(
                        heap,
                        (-bound, next(counter), depth + 1, child_los, child_his),
                    )
        if heap:
            upper = min(upper, max(lower, max(-heap[0][0], resolved)))
        else:
            upper = min(upper, max(lower, resolved))

    upper = max(upper, lower)
    return SolveReport(
        lower_bound=lower,
        upper_bound=upper,
        witness=witness,
        iterations=nodes,
        restarts_used=restarts_used,
        wall_time=time.perf_counter() - start,
        converged=upper - lower <= accuracy,
    )


# ---------------------------------------------------------------------------
# registry


SOLVER_NAMES = (
    "correlated",
    "reconstruct",
    "support-enum",
    "iterated-lp",
    "global",
    "oracle",
)


def run_solver(
    name: str, game: TeamGame, timeout: float | None = None, **params
) -> SolveReport:
    """Run a solver by registry name with keyword parameters.

    Used by the command line and the experiment harness; every solver comes
    back as a SolveReport so downstream code never cares which one ran.
    """
    if name == "correlated":
        start = time.perf_counter()
        dist, value = correlated_team_maxmin(game)
        pivot = int(params.get("pivot", 0))
        profile = reconstruct_mixed(dist, game, pivot)
        return SolveReport(
            lower_bound=team_value(game, profile).value,
            upper_bound=value,
            witness=profile,
            iterations=1,
            restarts_used=0,
            wall_time=time.perf_counter() - start,
            converged=True,
        )
    if name == "reconstruct":
        return reconstruct_best_pivot(game)
    if name == "support-enum":
        return support_enumeration(
            game,
            epsilon=float(params.get("epsilon", 1.0)),
            budget=params.get("budget"),
            upper_bound=params.get("upper_bound"),
        )
    if name == "iterated-lp":
        return iterated_lp(
            game,
            init=params.get("init", "random"),
            restarts=int(params.get("restarts", 10)),
            seed=int(params.get("seed", 0)),
            timeout=DEFAULT_TIMEOUT if timeout is None else timeout,
            max_rounds=int(params.get("max_rounds", 1000)),
        )
    if name == "global":
        return global_optimize(
            game,
            accuracy=float(params.get("accuracy", 1e-6)),
            budget=DEFAULT_TIMEOUT if timeout is None else timeout,
            seed=int(params.get("seed", 0)),
            restarts=int(params.get("restarts", 8)),
            max_nodes=int(params.get("max_nodes", 20_000)),
        )
    if name == "oracle":
        start = time.perf_counter()
        estimate = grid_oracle(
            game,
            target_error=float(params.get("target_error", 0.01)),
            max_evaluations=int(params.get("max_evaluations", 20_000_000)),
        )
        return SolveReport(
            lower_bound=estimate.value,
            upper_bound=estimate.value + estimate.error_bound,
            witness=estimate.witness,
            iterations=estimate.evaluations,
            restarts_used=0,
            wall_time=time.perf_counter() - start,
            converged=True,
        )
    raise ValueError(f"unknown solver {name!r}, expected one of {SOLVER_NAMES}")
