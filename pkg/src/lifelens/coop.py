"""Meet-everyone cooperation game with random stance flips.

Each repetition draws a row of m environment members with fixed stances
and a population of n players with initial stances, all uniform. Every
player walks the whole row; before each of the m meetings the player
flips stance with probability p, then banks the meeting payoff. A player
is contradictory when its stance changed at least once relative to the
stance it entered with - equivalently, when the sequence (initial
stance, meeting stances...) is not constant. With p solving
(1 - p)^m = 1/2 a player is contradictory with probability exactly 1/2.

The repetition's winner is the player with the highest total payoff,
lowest index on ties. The report records how often winners were
contradictory.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .seeds import DEFAULT_SEED, substream


class Stance(Enum):
    COOP = "C"
    NONCOOP = "N"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PayoffMatrix:
    """Row player's meeting payoff: cc/cn are a cooperator's takes against
    a cooperator / non-cooperator, nc/nn a non-cooperator's."""

    cc: int = 2
    cn: int = -1
    nc: int = 1
    nn: int = 0


def meeting_payoff(a: Stance, b: Stance, payoffs: PayoffMatrix = PayoffMatrix()) -> tuple[int, int]:
    """Payoffs (for a, for b) of one meeting."""
    table = {
        (Stance.COOP, Stance.COOP): (payoffs.cc, payoffs.cc),
        (Stance.COOP, Stance.NONCOOP): (payoffs.cn, payoffs.nc),
        (Stance.NONCOOP, Stance.COOP): (payoffs.nc, payoffs.cn),
        (Stance.NONCOOP, Stance.NONCOOP): (payoffs.nn, payoffs.nn),
    }
    return table[(a, b)]


def flip_probability_for_even_odds(m: int) -> float:
    """The p with (1 - p)^m = 1/2: staying put through all m flip
    decisions is then a coin toss."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return 1.0 - 2.0 ** (-1.0 / m)


@dataclass(frozen=True)
class CoopConfig:
    """Experiment shape. flip_probability None means even odds for
    env_size, resolved when the experiment runs."""

    env_size: int = 20
    population: int = 1000
    flip_probability: float | None = None
    repetitions: int = 100
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.env_size < 1 or self.population < 1 or self.repetitions < 1:
            raise ValueError("env_size, population and repetitions must be positive")
        if self.flip_probability is not None and not 0.0 <= self.flip_probability <= 1.0:
            raise ValueError(f"flip probability must lie in [0, 1], got {self.flip_probability}")

    def resolved_flip_probability(self) -> float:
        if self.flip_probability is None:
            return flip_probability_for_even_odds(self.env_size)
        return self.flip_probability


@dataclass(frozen=True)
class IndividualRecord:
    """One player's run through the row.

    stance_history holds the stance actually used at each of the m
    meetings; contradictory means the stance changed at least once
    relative to initial_stance (some flip fired).
    """

    initial_stance: Stance
    stance_history: tuple[Stance, ...]
    total_payoff: int
    contradictory: bool

    def __post_init__(self):
        changed = any(s != self.initial_stance for s in self.stance_history)
        if self.contradictory != changed:
            raise ValueError("contradictory flag disagrees with the stance history")


@dataclass(frozen=True)
class RepetitionResult:
    """mean_payoff_coop / mean_payoff_noncoop average the per-meeting
    payoff over this repetition's meetings played in that stance (NaN if
    the stance never occurred)."""

    index: int
    env_coop_count: int
    winner_index: int
    winner: IndividualRecord
    noncontradictory_fraction: float
    min_payoff: int
    max_payoff: int
    mean_payoff_coop: float
    mean_payoff_noncoop: float


@dataclass(frozen=True)
class CoopReport:
    """Everything a run produces; equal configs give equal reports."""

    config: CoopConfig
    payoffs: PayoffMatrix
    flip_probability: float
    repetitions: tuple[RepetitionResult, ...]
    contradictory_winner_pct: float
    noncontradictory_fraction: float
    mean_payoff_coop: float
    mean_payoff_noncoop: float


def run_coop_experiment(config: CoopConfig, payoffs: PayoffMatrix = PayoffMatrix()) -> CoopReport:
    """Run all repetitions; repetition r draws from substream(seed, r).

    Draw order within a repetition: the m environment stances, then the n
    initial player stances, then per player (in index order) one flip
    decision before each meeting. True encodes COOP in the inner loop.
    """
    m = config.env_size
    n = config.population
    p = config.resolved_flip_probability()
    pay_as_coop = (payoffs.cn, payoffs.cc)    # indexed by opponent-is-coop
    pay_as_noncoop = (payoffs.nn, payoffs.nc)

    results = []
    contradictory_winners = 0
    noncontra_total = 0
    coop_sum = coop_meetings = 0
    noncoop_sum = noncoop_meetings = 0

    for r in range(config.repetitions):
        rng = substream(config.seed, r)
        rand = rng.random
        env = tuple(rand() < 0.5 for _ in range(m))
        initial = tuple(rand() < 0.5 for _ in range(n))

        best_payoff: int | None = None
        winner_index = 0
        winner_initial = True
        winner_history: tuple[bool, ...] = ()
        rep_min = rep_max = 0
        noncontra = 0
        rep_coop_sum = rep_coop_meetings = 0
        rep_noncoop_sum = rep_noncoop_meetings = 0

        for i in range(n):
            stance = start = initial[i]
            total = 0
            history = []
            flipped = False
            for opponent in env:
                if rand() < p:
                    stance = not stance
                    flipped = True
                history.append(stance)
                if stance:
                    total += pay_as_coop[opponent]
                    rep_coop_sum += pay_as_coop[opponent]
                    rep_coop_meetings += 1
                else:
                    total += pay_as_noncoop[opponent]
                    rep_noncoop_sum += pay_as_noncoop[opponent]
                    rep_noncoop_meetings += 1
            if not flipped:
                noncontra += 1
            if best_payoff is None or total > best_payoff:
                best_payoff = total
                winner_index = i
                winner_initial = start
                winner_history = tuple(history)
            if i == 0:
                rep_min = rep_max = total
            else:
                rep_min = min(rep_min, total)
                rep_max = max(rep_max, total)

        assert best_payoff is not None
        winner = IndividualRecord(
            initial_stance=Stance.COOP if winner_initial else Stance.NONCOOP,
            stance_history=tuple(Stance.COOP if s else Stance.NONCOOP for s in winner_history),
            total_payoff=best_payoff,
            contradictory=any(s != winner_initial for s in winner_history),
        )
        if winner.contradictory:
            contradictory_winners += 1
        noncontra_total += noncontra
        coop_sum += rep_coop_sum
        coop_meetings += rep_coop_meetings
        noncoop_sum += rep_noncoop_sum
        noncoop_meetings += rep_noncoop_meetings
        results.append(RepetitionResult(
            index=r,
            env_coop_count=sum(env),
            winner_index=winner_index,
            winner=winner,
            noncontradictory_fraction=noncontra / n,
            min_payoff=rep_min,
            max_payoff=rep_max,
            mean_payoff_coop=(rep_coop_sum / rep_coop_meetings
                              if rep_coop_meetings else float("nan")),
            mean_payoff_noncoop=(rep_noncoop_sum / rep_noncoop_meetings
                                 if rep_noncoop_meetings else float("nan")),
        ))

    return CoopReport(
        config=config,
        payoffs=payoffs,
        flip_probability=p,
        repetitions=tuple(results),
        contradictory_winner_pct=100.0 * contradictory_winners / config.repetitions,
        noncontradictory_fraction=noncontra_total / (n * config.repetitions),
        mean_payoff_coop=coop_sum / coop_meetings if coop_meetings else float("nan"),
        mean_payoff_noncoop=noncoop_sum / noncoop_meetings if noncoop_meetings else float("nan"),
    )
