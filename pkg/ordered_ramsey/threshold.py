"""
Monte-Carlo probe of the random-graph threshold for the arrow relation.

G(n, p) is sampled on the ordered vertex set 1..n. One stream of uniforms per
(seed, trial) decides every edge at every grid point, so for a fixed trial the
sampled graphs grow with p. Arrowing is preserved by supergraphs, so once a
trial arrows at some p every larger grid point is known to arrow as well.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import partial
from itertools import combinations
from typing import List, Optional, Sequence, TextIO, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ordered_ramsey.arrow.search import arrows
from ordered_ramsey.config import DEFAULT_SEED
from ordered_ramsey.core.density import density_m2
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.errors import BudgetExceededError, PreconditionError

# Set up logging
logger = logging.getLogger(__name__)

CSV_COLUMNS = ["p", "trials", "arrows", "not_arrows", "unknown"]

Seed = Union[int, Sequence[int]]


class TrialOutcome(str, Enum):
    ARROWS = "ARROWS"
    NOT_ARROWS = "NOT_ARROWS"
    UNKNOWN = "UNKNOWN"


class ThresholdExperiment(BaseModel):
    """One scan: graph h, host size n, probabilities to probe, trials per probability."""

    model_config = ConfigDict(frozen=True)

    h: OrderedGraph
    n: int = Field(ge=1)
    p_grid: List[float]
    trials: int = Field(ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    budget: Optional[int] = None

    @field_validator("p_grid")
    @classmethod
    def _probabilities(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("p_grid must not be empty")
        bad = [p for p in value if not 0.0 <= p <= 1.0]
        if bad:
            raise ValueError(f"probabilities outside [0, 1]: {bad}")
        return value


class ThresholdRow(BaseModel):
    p: float
    trials: int
    arrows: int = 0
    not_arrows: int = 0
    unknown: int = 0

    @property
    def arrow_frequency(self) -> Optional[float]:
        """Share of decided trials that arrow; None when no trial was decided."""
        decided = self.arrows + self.not_arrows
        return self.arrows / decided if decided else None


class ThresholdScanResult(BaseModel):
    experiment: ThresholdExperiment
    rows: List[ThresholdRow]
    crossover_p: Optional[float] = None
    reference_scale: Optional[float] = None


def _generator(seed: Seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def _edges_below(n: int, uniforms: np.ndarray, p: float) -> List[tuple]:
    pairs = combinations(range(1, n + 1), 2)
    return [pair for pair, x in zip(pairs, uniforms) if x < p]


def sample_gnp(n: int, p: float, seed: Seed = DEFAULT_SEED) -> OrderedGraph:
    """
    Sample G(n, p) on 1..n.

    The pairs (u, v), u < v, are visited in lexicographic order and pair k is
    an edge iff the k-th uniform of a Philox stream keyed by seed is below p.
    The same seed gives the same graph on every platform.
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise PreconditionError(f"vertex count must be >= 0, got {n}")
    uniforms = _generator(seed).random(n * (n - 1) // 2)
    return OrderedGraph.unchecked(n, _edges_below(n, uniforms, p))


def _run_trial(exp: ThresholdExperiment, trial: int) -> List[TrialOutcome]:
    uniforms = _generator([exp.seed, trial]).random(exp.n * (exp.n - 1) // 2)
    outcomes = []
    arrowed_at: Optional[float] = None
    for p in exp.p_grid:
        if arrowed_at is not None and arrowed_at <= p:
            outcomes.append(TrialOutcome.ARROWS)
            continue
        g = OrderedGraph.unchecked(exp.n, _edges_below(exp.n, uniforms, p))
        try:
            cert = arrows(g, exp.h, exp.h, budget=exp.budget)
        except BudgetExceededError:
            logger.debug(f"Trial {trial} at p={p} ran out of budget")
            outcomes.append(TrialOutcome.UNKNOWN)
            continue
        if cert.arrows:
            arrowed_at = p if arrowed_at is None else min(arrowed_at, p)
            outcomes.append(TrialOutcome.ARROWS)
        else:
            outcomes.append(TrialOutcome.NOT_ARROWS)
    return outcomes


def _reference_scale(h: OrderedGraph, n: int) -> Optional[float]:
    try:
        m2 = density_m2(h, allow_single_edge=True)
    except PreconditionError as exc:
        logger.warning(f"No reference scale: {exc}")
        return None
    return float(n ** (-1 / float(m2)))


def run_threshold_scan(exp: ThresholdExperiment, threads: int = 1) -> ThresholdScanResult:
    """
    Estimate, per grid point, how often G(n, p) arrows (h, h).

    Args:
        exp: The experiment
        threads: Worker processes over trials; the table does not depend on it

    Returns:
        ThresholdScanResult whose rows follow p_grid; budget overruns are
        counted as unknown and left out of the frequencies
    """
    if exp.h.num_edges == 0:
        raise PreconditionError("the probed graph needs at least one edge")
    logger.info(f"Threshold scan: n={exp.n}, {len(exp.p_grid)} probabilities, {exp.trials} trials each")
    worker = partial(_run_trial, exp)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            per_trial = list(pool.map(worker, range(exp.trials)))
    else:
        per_trial = [worker(t) for t in range(exp.trials)]

    rows = []
    for k, p in enumerate(exp.p_grid):
        column = [outcomes[k] for outcomes in per_trial]
        rows.append(
            ThresholdRow(
                p=p,
                trials=exp.trials,
                arrows=column.count(TrialOutcome.ARROWS),
                not_arrows=column.count(TrialOutcome.NOT_ARROWS),
                unknown=column.count(TrialOutcome.UNKNOWN),
            )
        )
    crossover = next(
        (row.p for row in sorted(rows, key=lambda r: r.p) if (row.arrow_frequency or 0.0) >= 0.5),
        None,
    )
    unknown = sum(row.unknown for row in rows)
    if unknown:
        logger.warning(f"{unknown} samples exceeded the node budget")
    return ThresholdScanResult(
        experiment=exp,
        rows=rows,
        crossover_p=crossover,
        reference_scale=_reference_scale(exp.h, exp.n),
    )


def write_csv(result: ThresholdScanResult, stream: TextIO) -> None:
    """Write the `p,trials,arrows,not_arrows,unknown` table."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in result.rows:
        writer.writerow([repr(row.p), row.trials, row.arrows, row.not_arrows, row.unknown])
