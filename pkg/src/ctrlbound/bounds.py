"""Distance-to-leaders vectors and rank lower bounds.

Every node i of a network with leaders l_1 < ... < l_m carries a
distance-to-leaders (DL) vector d_i whose j-th entry is the hop
distance from i to l_j. A sequence of DL vectors is pseudo-monotonically
increasing (PMI) when each element has some coordinate that is strictly
smaller than that coordinate of every later element. The length of the
longest PMI sequence, delta, lower-bounds the rank of the
controllability matrix for every strictly positive choice of coupling
weights, which makes it a weight-free certificate of strong structural
controllable-subspace dimension.

Two cheaper companion quantities bracket delta: mu, one plus the
largest hop distance from any node to its nearest leader, satisfies
mu <= delta; upsilon, the number of distinct DL vectors, satisfies
delta <= upsilon (a PMI sequence can never repeat a vector).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import CapExceededError, GraphValidationError
from .graph import Graph, hops_to, require_connected

Row = tuple[int, ...]
RowsLike = Union["DLMatrix", Sequence[Sequence[int]]]

BRUTE_FORCE_CAP = 10


@dataclass(frozen=True)
class DLMatrix:
    """All DL vectors of one graph + leader-set instance.

    `rows[i-1]` is the DL vector of node i; `leaders` is strictly
    increasing. Constructed via `dl_vectors`, which guarantees finite
    entries (connected input) and a zero in each leader's own column.
    """

    leaders: tuple[int, ...]
    rows: tuple[Row, ...]

    def __post_init__(self):
        if not self.leaders:
            raise GraphValidationError("leader set must be nonempty")
        if any(b <= a for a, b in zip(self.leaders, self.leaders[1:])):
            raise GraphValidationError("leaders must be strictly increasing")
        n, m = len(self.rows), len(self.leaders)
        if any(not (1 <= l <= n) for l in self.leaders):
            raise GraphValidationError(f"leader id outside 1..{n}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != m:
                raise GraphValidationError(f"DL vector of node {i} has wrong dimension")
            if any(not isinstance(x, int) or x < 0 for x in row):
                raise GraphValidationError(f"DL vector of node {i} has a non-distance entry")
        for j, l in enumerate(self.leaders):
            if self.rows[l - 1][j] != 0:
                raise GraphValidationError(f"leader {l} must be at distance 0 from itself")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.leaders)


@dataclass(frozen=True)
class PMISequence:
    """An ordered run of DL vectors with one witness coordinate per element.

    `witnesses[i]` is the 1-based coordinate on which element i beats
    every later element; `nodes` are the originating 1-based node ids
    when known.
    """

    elements: tuple[Row, ...]
    witnesses: tuple[int, ...]
    nodes: Optional[tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class BoundReport:
    """delta with its bracketing measures and one maximum PMI witness."""

    delta: int
    mu: int
    upsilon: int
    witness: PMISequence

    def __post_init__(self):
        # mu <= delta <= upsilon must hold on every instance ever computed
        if not (1 <= self.mu <= self.delta <= self.upsilon):
            raise AssertionError(
                f"bound chain violated: upsilon={self.upsilon} >= delta={self.delta}"
                f" >= mu={self.mu} >= 1 must hold"
            )
        if len(self.witness) != self.delta:
            raise AssertionError("witness length must equal delta")


def _as_rows(data: RowsLike) -> tuple[Row, ...]:
    if isinstance(data, DLMatrix):
        return data.rows
    rows = tuple(tuple(int(x) for x in row) for row in data)
    if not rows:
        raise GraphValidationError("need at least one DL vector")
    m = len(rows[0])
    if m == 0 or any(len(r) != m for r in rows):
        raise GraphValidationError("DL vectors must share one nonzero dimension")
    return rows


def dl_vectors(g: Graph, leaders: Iterable[int]) -> DLMatrix:
    """DL vectors of every node for the given leader set.

    Leaders are deduplicated and sorted ascending. Requires g connected
    (strongly connected when directed) so all entries are finite.
    """
    ls = tuple(sorted({int(l) for l in leaders}))
    if not ls:
        raise GraphValidationError("leader set must be nonempty")
    for l in ls:
        if not (1 <= l <= g.n):
            raise GraphValidationError(f"leader {l} outside 1..{g.n}")
    require_connected(g)
    cols = [hops_to(g, l) for l in ls]
    rows = tuple(tuple(cols[j][i] for j in range(len(ls))) for i in range(g.n))
    return DLMatrix(leaders=ls, rows=rows)  # type: ignore[arg-type]


def is_pmi(seq: Union[PMISequence, Sequence[Sequence[int]]],
           witnesses: Optional[Sequence[int]] = None) -> bool:
    """Check the PMI ordering rule.

    With witnesses (one 1-based coordinate per element) the stated
    assignment is verified directly. Without, each position is checked
    for the existence of a valid coordinate; positions are independent,
    so this scan is a complete search over witness assignments.
    """
    if isinstance(seq, PMISequence):
        if witnesses is None:
            witnesses = seq.witnesses
        seq = seq.elements
    vecs = [tuple(v) for v in seq]
    if not vecs:
        return True
    m = len(vecs[0])
    if any(len(v) != m for v in vecs):
        raise ValueError("dimension mismatch among sequence elements")
    if witnesses is not None:
        if len(witnesses) != len(vecs):
            raise ValueError("need exactly one witness per element")
        if any(not (1 <= a <= m) for a in witnesses):
            raise ValueError(f"witness coordinate outside 1..{m}")
        return all(
            vecs[i][witnesses[i] - 1] < vecs[j][witnesses[i] - 1]
            for i in range(len(vecs))
            for j in range(i + 1, len(vecs))
        )
    for i, v in enumerate(vecs):
        rest = vecs[i + 1:]
        if not any(all(v[a] < u[a] for u in rest) for a in range(m)):
            return False
    return True


def pmi_level_sets(data: RowsLike) -> list[list[frozenset[int]]]:
    """Candidate-set levels explored while maximizing PMI length.

    Level p holds the sets of row indices still eligible as the p-th
    element. Children of each nonempty set are generated per coordinate
    by dropping every row attaining that coordinate's minimum; identical
    sets within a level are merged (children depend only on the set, so
    merging cannot change the result).
    """
    levels, _ = _expand_levels(_as_rows(data))
    return [list(level.keys()) for level in levels]


def _expand_levels(rows: tuple[Row, ...]):
    m = len(rows[0])
    full = frozenset(range(len(rows)))
    # per level: candidate set -> (parent set, 0-based coordinate used)
    levels: list[dict[frozenset[int], tuple[Optional[frozenset[int]], int]]] = [
        {full: (None, -1)}
    ]
    while any(levels[-1]):
        nxt: dict[frozenset[int], tuple[Optional[frozenset[int]], int]] = {}
        for cand in levels[-1]:
            if not cand:
                continue
            for j in range(m):
                mn = min(rows[t][j] for t in cand)
                child = frozenset(t for t in cand if rows[t][j] > mn)
                if child not in nxt:
                    nxt[child] = (cand, j)
        levels.append(nxt)
    return levels, full


def longest_pmi(data: RowsLike) -> PMISequence:
    """One maximum-length PMI sequence of the given vectors.

    Levels of candidate sets are expanded exhaustively (minimum-entry
    elements only, which is lossless for maximum length), then one
    decision path is walked back: at each level the surviving row with
    the smallest value on the chosen coordinate becomes the element,
    ties broken by lowest node id.
    """
    rows = _as_rows(data)
    levels, _ = _expand_levels(rows)
    delta = len(levels) - 1
    # chain of sets level 1..delta and the coordinate used between them
    target = next(s for s in levels[delta - 1] if s) if delta > 1 else next(iter(levels[0]))
    chain: list[frozenset[int]] = [target]
    alphas_0based: list[int] = []
    for p in range(delta - 1, 0, -1):
        parent, j = levels[p][chain[0]]
        assert parent is not None
        chain.insert(0, parent)
        alphas_0based.insert(0, j)
    alphas_0based.append(0)  # last element's condition is vacuous; use coordinate 1
    nodes: list[int] = []
    for cand, j in zip(chain, alphas_0based):
        pick = min(cand, key=lambda t: (rows[t][j], t))
        nodes.append(pick + 1)
    return PMISequence(
        elements=tuple(rows[i - 1] for i in nodes),
        witnesses=tuple(a + 1 for a in alphas_0based),
        nodes=tuple(nodes),
    )


def mu_bound(data: RowsLike) -> int:
    """One plus the largest hop distance from any node to its nearest leader."""
    rows = _as_rows(data)
    return 1 + max(min(row) for row in rows)


def upsilon_count(data: RowsLike) -> int:
    """Number of distinct DL vectors; an upper bound on delta."""
    return len(set(_as_rows(data)))


def delta_bound(dl: RowsLike) -> BoundReport:
    """Longest-PMI bound with witness, plus mu and upsilon.

    The report asserts the chain mu <= delta <= upsilon on construction.
    """
    rows = _as_rows(dl)
    witness = longest_pmi(rows)
    delta = len(witness)
    if delta > len(rows):
        raise AssertionError("delta cannot exceed the number of DL vectors")
    return BoundReport(
        delta=delta,
        mu=mu_bound(rows),
        upsilon=upsilon_count(rows),
        witness=witness,
    )


def brute_force_delta(data: RowsLike, cap: int = BRUTE_FORCE_CAP) -> int:
    """Exhaustive longest-PMI length, for cross-checking `delta_bound`.

    Searches every ordering implicitly: a vector set is orderable into a
    PMI sequence iff some member beats the componentwise minimum of the
    others on some coordinate and the rest is orderable, which is a
    reachability question over subsets. Memoized over the 2^n subsets,
    hence the size cap.
    """
    rows = _as_rows(data)
    n, m = len(rows), len(rows[0])
    if n > cap:
        raise CapExceededError(f"brute force capped at {cap} vectors, got {n}")
    size = 1 << n
    # componentwise minima per subset, built up one low bit at a time
    minvec: list[tuple] = [()] * size
    minvec[0] = tuple([math.inf] * m)
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        minvec[mask] = tuple(min(a, b) for a, b in zip(minvec[rest], rows[low]))
    orderable = bytearray(size)
    orderable[0] = 1
    best = 0
    for mask in range(1, size):
        sub = mask
        while sub:
            low = (sub & -sub).bit_length() - 1
            sub ^= 1 << low
            rest = mask ^ (1 << low)
            if orderable[rest] and any(
                rows[low][a] < minvec[rest][a] for a in range(m)
            ):
                orderable[mask] = 1
                best = max(best, mask.bit_count())
                break
    return best


def report_json(g: Graph, dl: DLMatrix, report: BoundReport) -> dict:
    """Bound report as the documented JSON object (field names are fixed)."""
    return {
        "n": g.n,
        "directed": g.directed,
        "leaders": list(dl.leaders),
        "delta": report.delta,
        "mu": report.mu,
        "upsilon": report.upsilon,
        "witness": {
            "nodes": list(report.witness.nodes or ()),
            "alphas": list(report.witness.witnesses),
        },
    }
