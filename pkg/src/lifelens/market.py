"""One-week market game: price-consistent versus unconstrained traders.

Prices live on {900, 1000, 1100} and follow a deterministic next-price
map drawn uniformly from the 27 possible maps, with a uniform starting
price. Every trader starts the week with 10000 cash and 10 shares and
trades once per day at that day's price; final capital is cash plus
shares valued at the last price.

Group A traders are consistent: they commit in advance to one signed
trade per price level (drawn uniform over what the starting portfolio
could execute) and repeat that exact choice every day the price recurs,
clamped to whatever is feasible at the moment. Group B traders redraw an
arbitrary feasible trade each day. Each test compares the best final
capital either group of 100 achieves.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Protocol

from .seeds import DEFAULT_SEED, substream

PRICES = (900, 1000, 1100)
DAYS_PER_WEEK = 7
START_CASH = 10000
START_SHARES = 10


@dataclass(frozen=True)
class PriceDynamics:
    """A deterministic next-price map plus the week's starting price."""

    initial_price: int
    targets: tuple[int, int, int]   # next price after 900, 1000, 1100

    def __post_init__(self):
        if self.initial_price not in PRICES:
            raise ValueError(f"initial price must be one of {PRICES}")
        if len(self.targets) != len(PRICES) or any(t not in PRICES for t in self.targets):
            raise ValueError(f"targets must map each of {PRICES} to one of {PRICES}")

    def next_price(self, price: int) -> int:
        return self.targets[PRICES.index(price)]

    def path(self, days: int = DAYS_PER_WEEK) -> tuple[int, ...]:
        prices = [self.initial_price]
        for _ in range(days - 1):
            prices.append(self.next_price(prices[-1]))
        return tuple(prices)

    @property
    def digits(self) -> str:
        """The map as three digits: index of the target of 900, 1000, 1100."""
        return "".join(str(PRICES.index(t)) for t in self.targets)


def sample_dynamics(rng: Random) -> PriceDynamics:
    """Uniform over the 27 maps and the 3 starting prices (targets drawn
    first, in price order, then the starting price)."""
    targets = tuple(rng.choice(PRICES) for _ in range(3))
    return PriceDynamics(initial_price=rng.choice(PRICES), targets=targets)


@dataclass(frozen=True)
class Portfolio:
    """Holdings between trades; both components stay non-negative."""

    cash: int
    shares: int

    def __post_init__(self):
        if self.cash < 0 or self.shares < 0:
            raise ValueError(f"portfolio went negative: cash={self.cash} shares={self.shares}")

    def value(self, price: int) -> int:
        return self.cash + self.shares * price

    def max_buy(self, price: int) -> int:
        return self.cash // price

    def execute(self, trade: int, price: int) -> "Portfolio":
        """Apply a feasible signed trade (positive buys shares)."""
        return Portfolio(cash=self.cash - trade * price, shares=self.shares + trade)


class TraderPolicy(Protocol):
    def intended_trade(self, price: int, portfolio: Portfolio, rng: Random) -> int: ...


@dataclass(frozen=True)
class ConsistentPolicy:
    """One committed signed trade per price level: same price, same choice.

    The intended trade never varies across days sharing a price; only
    clamping against the current portfolio can make the executed trade
    differ from it.
    """

    trades: tuple[int, int, int]   # for 900, 1000, 1100 in order

    def __post_init__(self):
        if len(self.trades) != len(PRICES):
            raise ValueError("one committed trade per price is required")

    def intended_trade(self, price: int, portfolio: Portfolio, rng: Random) -> int:
        return self.trades[PRICES.index(price)]


@dataclass(frozen=True)
class FreePolicy:
    """Redraws a uniform feasible signed trade every single day."""

    def intended_trade(self, price: int, portfolio: Portfolio, rng: Random) -> int:
        return rng.randint(-portfolio.shares, portfolio.max_buy(price))


def sample_consistent_policy(rng: Random) -> ConsistentPolicy:
    """Commitments drawn uniform over what the starting portfolio could
    execute at each price, in price order."""
    start = Portfolio(START_CASH, START_SHARES)
    return ConsistentPolicy(tuple(
        rng.randint(-start.shares, start.max_buy(price)) for price in PRICES
    ))


def _run_week(dynamics: PriceDynamics, policy: TraderPolicy, rng: Random,
              days: int) -> tuple[int, int]:
    """(final capital, number of clamped trades) for one trader's week."""
    portfolio = Portfolio(START_CASH, START_SHARES)
    clamped = 0
    path = dynamics.path(days)
    for price in path:
        intended = policy.intended_trade(price, portfolio, rng)
        trade = max(-portfolio.shares, min(intended, portfolio.max_buy(price)))
        if trade != intended:
            clamped += 1
        portfolio = portfolio.execute(trade, price)
    return portfolio.value(path[-1]), clamped


def simulate_week(dynamics: PriceDynamics, policy: TraderPolicy, rng: Random | None = None,
                  days: int = DAYS_PER_WEEK) -> int:
    """Final capital of one trader; infeasible intentions are clamped."""
    if days < 1:
        raise ValueError(f"the week needs at least one day, got {days}")
    return _run_week(dynamics, policy, rng if rng is not None else Random(0), days)[0]


@dataclass(frozen=True)
class MarketTest:
    index: int
    initial_price: int
    transition_digits: str
    best_consistent: int
    best_free: int

    @property
    def comparison(self) -> str:
        if self.best_consistent > self.best_free:
            return "A>B"
        if self.best_free > self.best_consistent:
            return "B>A"
        return "tie"


@dataclass(frozen=True)
class MarketReport:
    """Per-test bests plus the three comparison counts."""

    tests: int
    group_size: int
    days: int
    seed: int
    results: tuple[MarketTest, ...]
    count_a_gt_b: int
    count_b_gt_a: int
    count_tie: int
    clamped_trades: int


def run_market_experiment(tests: int = 50, group_size: int = 100,
                          days: int = DAYS_PER_WEEK, seed: int = DEFAULT_SEED) -> MarketReport:
    """Run all tests; test t draws from substream(seed, t).

    Draw order within a test: the dynamics, then group A (per trader:
    the three committed trades, then the week), then group B (per
    trader: one trade per day). Bests are exact integer maxima.
    """
    if tests < 1 or group_size < 1:
        raise ValueError("tests and group_size must be positive")
    results = []
    a_gt_b = b_gt_a = ties = 0
    clamped_total = 0
    for t in range(tests):
        rng = substream(seed, t)
        dynamics = sample_dynamics(rng)
        best_a: int | None = None
        for _ in range(group_size):
            policy = sample_consistent_policy(rng)
            capital, clamped = _run_week(dynamics, policy, rng, days)
            clamped_total += clamped
            if best_a is None or capital > best_a:
                best_a = capital
        best_b: int | None = None
        free = FreePolicy()
        for _ in range(group_size):
            capital, clamped = _run_week(dynamics, free, rng, days)
            clamped_total += clamped
            if best_b is None or capital > best_b:
                best_b = capital
        assert best_a is not None and best_b is not None
        result = MarketTest(
            index=t,
            initial_price=dynamics.initial_price,
            transition_digits=dynamics.digits,
            best_consistent=best_a,
            best_free=best_b,
        )
        results.append(result)
        if result.comparison == "A>B":
            a_gt_b += 1
        elif result.comparison == "B>A":
            b_gt_a += 1
        else:
            ties += 1
    return MarketReport(
        tests=tests,
        group_size=group_size,
        days=days,
        seed=seed,
        results=tuple(results),
        count_a_gt_b=a_gt_b,
        count_b_gt_a=b_gt_a,
        count_tie=ties,
        clamped_trades=clamped_total,
    )
