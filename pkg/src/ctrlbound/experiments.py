"""Ensemble comparison of delta against mu and upsilon on random graphs.

One experiment sweeps a parameter grid (edge probability p for
Erdos-Renyi, attachment count m for Barabasi-Albert). Each grid point
runs `trials` independent cases: sample a connected graph, draw leaders
uniformly without replacement, compute delta, mu, upsilon, and average.
Streams are derived from (seed, grid index, trial index), so results do
not depend on execution order and a fixed seed reproduces the CSV byte
for byte.

The chain upsilon >= delta >= mu is asserted on every trial; any
violation aborts the run.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .bounds import delta_bound, dl_vectors
from .errors import GenerationError, GraphValidationError
from .generators import GenSpec, canonical_family, generate, resample_until_connected
from .rng import derive_seed, spawn_rng

DEFAULT_ER_GRID = tuple(p / 10 for p in range(1, 10))
DEFAULT_BA_GRID = tuple(range(1, 11))

_GRAPH_STREAM, _LEADER_STREAM = 0, 1


@dataclass(frozen=True)
class ExperimentSpec:
    family: str
    grid: tuple = ()
    n: int = 50
    trials: int = 50
    leaders_per_trial: int = 2
    seed: int = 0
    max_attempts: int = 100

    def __post_init__(self):
        family = canonical_family(self.family)
        object.__setattr__(self, "family", family)
        if not self.grid:
            default = DEFAULT_ER_GRID if family == "erdos-renyi" else DEFAULT_BA_GRID
            object.__setattr__(self, "grid", tuple(default))
        else:
            object.__setattr__(self, "grid", tuple(self.grid))
        if self.trials < 1:
            raise GraphValidationError(f"trials must be >= 1, got {self.trials}")
        if not (1 <= self.leaders_per_trial <= self.n):
            raise GraphValidationError(
                f"leaders-per-trial must be in 1..{self.n}, got {self.leaders_per_trial}"
            )


@dataclass(frozen=True)
class ExperimentRow:
    param: float
    mean_delta: float
    mean_mu: float
    mean_upsilon: float
    trials_used: int


def _run_trial(spec: ExperimentSpec, grid_idx: int, trial: int) -> Optional[tuple[int, int, int]]:
    """(delta, mu, upsilon) for one case, or None when sampling exhausts."""
    param = spec.grid[grid_idx]
    gen = GenSpec(spec.family, spec.n, param,
                  seed=derive_seed(spec.seed, grid_idx, trial, _GRAPH_STREAM))
    try:
        g, _ = resample_until_connected(gen, max_attempts=spec.max_attempts)
    except GenerationError:
        return None
    rng = spawn_rng(spec.seed, grid_idx, trial, _LEADER_STREAM)
    leaders = [int(x) + 1 for x in
               rng.choice(spec.n, size=spec.leaders_per_trial, replace=False)]
    report = delta_bound(dl_vectors(g, leaders))
    if not (report.upsilon >= report.delta >= report.mu):
        raise AssertionError(
            f"bound chain violated at param={param}, trial={trial}: {report}"
        )
    return report.delta, report.mu, report.upsilon


def _trial_args(spec: ExperimentSpec):
    return [(spec, gi, t) for gi in range(len(spec.grid)) for t in range(spec.trials)]


def run_experiment(spec: ExperimentSpec, threads: int = 1) -> list[ExperimentRow]:
    """One ExperimentRow per grid point; deterministic for a given seed.

    threads > 1 fans trials out to worker processes; per-trial streams
    make the result identical regardless of scheduling.
    """
    args = _trial_args(spec)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_trial, *zip(*args), chunksize=8))
    else:
        outcomes = [_run_trial(*a) for a in args]
    rows = []
    for gi, param in enumerate(spec.grid):
        triples = [o for o in outcomes[gi * spec.trials:(gi + 1) * spec.trials]
                   if o is not None]
        used = len(triples)
        if used:
            mean = lambda idx: sum(t[idx] for t in triples) / used
            row = ExperimentRow(param, mean(0), mean(1), mean(2), used)
        else:
            row = ExperimentRow(param, math.nan, math.nan, math.nan, 0)
        rows.append(row)
    return rows


def emit_csv(rows: Sequence[ExperimentRow]) -> str:
    """Stable CSV: param,mean_delta,mean_mu,mean_upsilon,trials_used."""
    lines = ["param,mean_delta,mean_mu,mean_upsilon,trials_used"]
    for r in rows:
        lines.append(
            f"{r.param},{r.mean_delta:.6f},{r.mean_mu:.6f},{r.mean_upsilon:.6f},{r.trials_used}"
        )
    return "\n".join(lines) + "\n"


def rows_json(rows: Sequence[ExperimentRow]) -> list[dict]:
    return [
        {
            "param": r.param,
            "mean_delta": r.mean_delta,
            "mean_mu": r.mean_mu,
            "mean_upsilon": r.mean_upsilon,
            "trials_used": r.trials_used,
        }
        for r in rows
    ]
