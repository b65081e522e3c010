"""Controllability-matrix ground truth.

Assembles the input matrix B and the controllability matrix
[B, (-L)B, (-L)^2 B, ..., (-L)^(n-1) B], computes its rank either in
exact rational arithmetic (fraction-free elimination, immune to
cancellation) or numerically (SVD threshold), and validates the two
structural facts the distance bound rests on, over sampled positive
integer weightings:

- powers of -L inherit the hop-distance zero pattern: entry (i, j) of
  (-L)^r is exactly zero for r < dist(i, j) and nonzero at r = dist(i, j);
- rank of the controllability matrix >= delta for every weighting.

Exact arithmetic is the default oracle; sampling integer weights keeps
the rationals bounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds import delta_bound, dl_vectors
from .errors import GraphValidationError
from .graph import Graph, Matrix, bfs_distances, laplacian, require_connected
from .rng import spawn_rng

WEIGHT_LOW, WEIGHT_HIGH = 1, 1000
EXACT_DEFAULT_MAX_N = 30


@dataclass(frozen=True)
class RankReport:
    rank: int
    method: str  # "exact" | "numerical"
    tolerance: Optional[float] = None  # numerical only
    sample: Optional[dict] = None  # weight-sample descriptor when applicable


@dataclass(frozen=True)
class Verdict:
    """Outcome of a sampled property check; failures are data, not exceptions."""

    property: str
    trials: int
    passed: bool
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)


def verdict_json(v: Verdict) -> dict:
    out: dict = {"property": v.property, "trials": v.trials, "passed": v.passed}
    if v.counterexample is not None:
        out["counterexample"] = v.counterexample
    if v.details:
        out["details"] = v.details
    return out


def input_matrix(n: int, leaders: Iterable[int]) -> list[list[int]]:
    """n x m selector matrix: column j puts a 1 on leader l_j's row."""
    ls = sorted({int(l) for l in leaders})
    if not ls:
        raise GraphValidationError("leader set must be nonempty")
    if any(not (1 <= l <= n) for l in ls):
        raise GraphValidationError(f"leader id outside 1..{n}")
    b = [[0] * len(ls) for _ in range(n)]
    for j, l in enumerate(ls):
        b[l - 1][j] = 1
    return b


def _matvec(mat: Matrix, vec: list) -> list:
    return [sum(row[j] * vec[j] for j in range(len(vec))) for row in mat]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    return [[sum(arow[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for arow in a]


def ctrb_matrix(lap: Matrix, b: Sequence[Sequence]) -> Matrix:
    """[B, (-L)B, ..., (-L)^(n-1)B], built by repeated matrix-vector products.

    Block k holds (-L)^k B; no matrix power is ever formed.
    """
    n = len(lap)
    if any(len(row) != n for row in lap):
        raise GraphValidationError("Laplacian must be square")
    if len(b) != n:
        raise GraphValidationError(f"input matrix has {len(b)} rows, Laplacian has {n}")
    m = len(b[0]) if n else 0
    if any(len(row) != m for row in b):
        raise GraphValidationError("input matrix rows differ in length")
    neg = [[-x for x in row] for row in lap]
    # chains[j][k] = (-L)^k b_j
    chains: list[list[list]] = []
    for j in range(m):
        col = [b[i][j] for i in range(n)]
        chain = [col]
        for _ in range(n - 1):
            col = _matvec(neg, col)
            chain.append(col)
        chains.append(chain)
    gamma: Matrix = [[0] * (n * m) for _ in range(n)]
    for k in range(n):
        for j in range(m):
            for i in range(n):
                gamma[i][k * m + j] = chains[j][k][i]
    return gamma


def _is_exact(mat: Sequence[Sequence]) -> bool:
    return all(isinstance(x, (int, Fraction)) and not isinstance(x, bool)
               for row in mat for x in row)


def exact_rank(mat: Sequence[Sequence]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Rows are scaled to integers first (rank-preserving), after which all
    intermediate values stay integral; Python integers cannot overflow.
    """
    rows: list[list[int]] = []
    for row in mat:
        scale = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * scale) for x in row])
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            rrc = rows[r][c]
            if ric:
                for j in range(c + 1, ncols):
                    rows[i][j] = (rrc * rows[i][j] - ric * rows[r][j]) // prev
            else:
                for j in range(c + 1, ncols):
                    rows[i][j] = (rrc * rows[i][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
    return r


def numerical_rank(mat: Sequence[Sequence], n: Optional[int] = None,
                   tolerance: Optional[float] = None) -> tuple[int, float]:
    """SVD-threshold rank with tolerance n * eps * sigma_max.

    Columns are normalized to unit length first (rank-invariant); the
    controllability matrix mixes blocks of wildly different scale and
    would otherwise drown its small blocks below any global threshold.
    """
    a = np.array(mat, dtype=float)
    if a.size == 0:
        return 0, 0.0
    if n is None:
        n = a.shape[0]
    norms = np.linalg.norm(a, axis=0)
    keep = norms > 0.0
    if not keep.any():
        return 0, 0.0
    a = a[:, keep] / norms[keep]
    s = np.linalg.svd(a, compute_uv=False)
    tol = tolerance if tolerance is not None else n * np.finfo(float).eps * float(s[0])
    return int(np.count_nonzero(s > tol)), float(tol)


def rank(gamma: Sequence[Sequence], mode: str = "auto",
         tolerance: Optional[float] = None, sample: Optional[dict] = None) -> RankReport:
    """Rank of a controllability matrix.

    mode "auto" picks exact arithmetic when every entry is rational and
    the system has at most 30 nodes, numerical SVD otherwise.
    """
    if mode not in ("auto", "exact", "numerical"):
        raise ValueError(f"unknown rank mode {mode!r}")
    n = len(gamma)
    exact_ok = _is_exact(gamma)
    if mode == "exact" and not exact_ok:
        raise GraphValidationError("exact rank needs rational entries; got floats")
    use_exact = mode == "exact" or (mode == "auto" and exact_ok and n <= EXACT_DEFAULT_MAX_N)
    if use_exact:
        return RankReport(rank=exact_rank(gamma), method="exact", sample=sample)
    rk, tol = numerical_rank(gamma, n=n, tolerance=tolerance)
    return RankReport(rank=rk, method="numerical", tolerance=tol, sample=sample)


def sample_weights(g: Graph, seed: int, trial: int) -> Graph:
    """Reweight g with integers drawn uniformly from 1..1000.

    The stream is derived from (seed, trial), so trials are independent
    and order-insensitive.
    """
    rng = spawn_rng(seed, trial)
    ws = [Fraction(int(x)) for x in
          rng.integers(WEIGHT_LOW, WEIGHT_HIGH, size=len(g.edges), endpoint=True)]
    return g.reweighted(ws)


def check_lemma1(g: Graph, trials: int = 5, seed: int = 0) -> Verdict:
    """Zero/nonzero pattern of powers of -L against hop distances.

    For each sampled weighting and every ordered pair (i, j): entry
    (i, j) of (-L)^r must vanish exactly for all r < dist(i, j) and be
    nonzero at r = dist(i, j). Checked in exact arithmetic.
    """
    require_connected(g)
    dist = bfs_distances(g)
    max_r = max(d for row in dist for d in row if d is not None)
    for t in range(trials):
        h = sample_weights(g, seed, t)
        neg = [[-x for x in row] for row in laplacian(h)]
        power: Matrix = [[Fraction(int(i == j)) for j in range(g.n)] for i in range(g.n)]
        for r in range(max_r + 1):
            for i in range(g.n):
                for j in range(g.n):
                    d = dist[i][j]
                    if d is None:
                        continue
                    bad = (r < d and power[i][j] != 0) or (r == d and power[i][j] == 0)
                    if bad:
                        return Verdict(
                            property="laplacian-power-zero-pattern",
                            trials=trials,
                            passed=False,
                            counterexample={
                                "trial": t,
                                "i": i + 1,
                                "j": j + 1,
                                "r": r,
                                "dist": d,
                                "entry": str(power[i][j]),
                            },
                        )
            if r < max_r:
                power = _matmul(neg, power)
    return Verdict(property="laplacian-power-zero-pattern", trials=trials, passed=True)


def check_theorem(g: Graph, leaders: Iterable[int], trials: int = 5,
                  seed: int = 0) -> Verdict:
    """rank(controllability matrix) >= delta over sampled weightings.

    Delta is weight-free, so it is computed once; each trial draws a
    fresh integer weighting and computes the exact rank. The minimum
    rank seen is reported as an empirical upper estimate of the
    strong-structural controllable-subspace dimension.
    """
    require_connected(g)
    dl = dl_vectors(g, leaders)
    delta = delta_bound(dl).delta
    min_rank: Optional[int] = None
    b = input_matrix(g.n, dl.leaders)
    for t in range(trials):
        h = sample_weights(g, seed, t)
        gamma = ctrb_matrix(laplacian(h), b)
        rep = rank(gamma, mode="exact",
                   sample={"seed": seed, "trial": t,
                           "distribution": f"uniform-int-{WEIGHT_LOW}-{WEIGHT_HIGH}"})
        min_rank = rep.rank if min_rank is None else min(min_rank, rep.rank)
        if rep.rank < delta:
            return Verdict(
                property="ctrb-rank-lower-bound",
                trials=trials,
                passed=False,
                counterexample={
                    "trial": t,
                    "rank": rep.rank,
                    "delta": delta,
                    "weights": [str(w) for _, _, w in h.edges],
                },
                details={"delta": delta, "min_rank": rep.rank},
            )
    return Verdict(
        property="ctrb-rank-lower-bound",
        trials=trials,
        passed=True,
        details={"delta": delta, "min_rank": min_rank},
    )
