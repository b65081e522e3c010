"""Minimal leader sets certifying a target controllable dimension.

Solves: minimize the number of leaders subject to delta >= k. Feasible
for every k <= n because with all nodes as leaders every ordering of
the DL vectors is PMI, so delta = n. The exhaustive solver walks
cardinalities 1, 2, ... and subsets in lexicographic order, returning
the first feasible set, which is therefore a true optimum. Since a set
with fewer than k distinct DL vectors can never reach delta = k,
upsilon < k prunes candidates before the delta computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .bounds import delta_bound, dl_vectors, upsilon_count
from .errors import BudgetExceededError, GraphValidationError
from .graph import Graph, require_connected


@dataclass(frozen=True)
class SelectionProblem:
    g: Graph
    k: int
    mode: str = "exhaustive"  # "exhaustive" | "greedy"
    budget: Optional[int] = None  # max leader count to try

    def __post_init__(self):
        if not (1 <= self.k <= self.g.n):
            raise GraphValidationError(f"target k must be in 1..{self.g.n}, got {self.k}")
        if self.mode not in ("exhaustive", "greedy"):
            raise GraphValidationError(f"unknown selection mode {self.mode!r}")
        if self.budget is not None and self.budget < 1:
            raise GraphValidationError(f"budget must be >= 1, got {self.budget}")


@dataclass(frozen=True)
class SelectionResult:
    leaders: tuple[int, ...]
    delta: int
    optimal: bool
    sets_evaluated: int


def prune_by_upsilon(g: Graph, leaders: Iterable[int], k: int) -> bool:
    """False when the distinct-DL-vector count already rules out delta >= k."""
    return upsilon_count(dl_vectors(g, leaders)) >= k


def select_exhaustive(p: SelectionProblem, use_pruning: bool = True) -> SelectionResult:
    """Smallest leader set (lexicographically first at its size) with delta >= k."""
    require_connected(p.g)
    nodes = range(1, p.g.n + 1)
    cap = p.g.n if p.budget is None else min(p.budget, p.g.n)
    examined = 0
    for size in range(1, cap + 1):
        for cand in combinations(nodes, size):
            examined += 1
            dl = dl_vectors(p.g, cand)
            if use_pruning and upsilon_count(dl) < p.k:
                continue
            report = delta_bound(dl)
            if report.delta >= p.k:
                return SelectionResult(
                    leaders=cand, delta=report.delta, optimal=True,
                    sets_evaluated=examined,
                )
    raise BudgetExceededError(
        f"no leader set of size <= {cap} reaches delta >= {p.k}"
    )


def select_greedy(p: SelectionProblem) -> SelectionResult:
    """Grow the leader set by the node whose addition maximizes delta.

    Ties go to the lowest node id. Not guaranteed minimal; terminates
    because delta reaches n once every node leads.
    """
    require_connected(p.g)
    chosen: list[int] = []
    examined = 0
    best_delta = 0
    while best_delta < p.k:
        best_node = None
        best_node_delta = -1
        for cand in range(1, p.g.n + 1):
            if cand in chosen:
                continue
            examined += 1
            d = delta_bound(dl_vectors(p.g, chosen + [cand])).delta
            if d > best_node_delta:
                best_node, best_node_delta = cand, d
        assert best_node is not None
        chosen.append(best_node)
        best_delta = best_node_delta
    return SelectionResult(
        leaders=tuple(sorted(chosen)), delta=best_delta, optimal=False,
        sets_evaluated=examined,
    )


def select_leaders(p: SelectionProblem) -> SelectionResult:
    return select_exhaustive(p) if p.mode == "exhaustive" else select_greedy(p)


def selection_json(r: SelectionResult) -> dict:
    return {
        "leaders": list(r.leaders),
        "delta": r.delta,
        "optimal": r.optimal,
        "sets_evaluated": r.sets_evaluated,
    }
