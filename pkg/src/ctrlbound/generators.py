"""Seeded construction of the graph families used in the experiments.

Deterministic families (path, cycle, complete, star) ignore the seed.
Random families draw from the Philox streams in `rng`, so the same
(spec, seed) always yields the same edge set.

Barabasi-Albert convention: the seed graph is the complete graph on the
first m nodes; each subsequent node attaches to m distinct existing
nodes, sampled without replacement with probability proportional to
degree at the moment the new node arrives (degrees are frozen during
the node's m draws; an all-zero degree pool falls back to uniform,
which only occurs for m = 1 at the first attachment). The result has
m*(n-m) + m*(m-1)/2 edges and is always connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GenerationError, GraphValidationError
from .graph import Graph, build_graph, is_connected
from .rng import derive_seed, spawn_rng

DETERMINISTIC_FAMILIES = ("path", "cycle", "complete", "star")
RANDOM_FAMILIES = ("erdos-renyi", "barabasi-albert")
FAMILIES = DETERMINISTIC_FAMILIES + RANDOM_FAMILIES

_ALIASES = {"er": "erdos-renyi", "ba": "barabasi-albert"}

_UNIT = Fraction(1)


def canonical_family(name: str) -> str:
    name = name.strip().lower()
    name = _ALIASES.get(name, name)
    if name not in FAMILIES:
        raise GraphValidationError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}"
        )
    return name


@dataclass(frozen=True)
class GenSpec:
    """What to generate: family, size, family parameter, seed.

    param is the edge probability p for erdos-renyi (0 < p <= 1) and the
    attachment count m for barabasi-albert (1 <= m < n); deterministic
    families take no parameter.
    """

    family: str
    n: int
    param: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", canonical_family(self.family))
        if self.n < 2:
            raise GraphValidationError(f"need n >= 2, got {self.n}")
        if self.family == "erdos-renyi":
            if self.param is None or not (0.0 < float(self.param) <= 1.0):
                raise GraphValidationError(f"erdos-renyi needs 0 < p <= 1, got {self.param}")
        elif self.family == "barabasi-albert":
            if self.param is None or int(self.param) != self.param:
                raise GraphValidationError(f"barabasi-albert needs integer m, got {self.param}")
            if not (1 <= int(self.param) < self.n):
                raise GraphValidationError(
                    f"barabasi-albert needs 1 <= m < n, got m={self.param}, n={self.n}"
                )
        elif self.param is not None:
            raise GraphValidationError(f"family {self.family!r} takes no parameter")


def generate(spec: GenSpec) -> Graph:
    """Unit-weight undirected graph for the spec; bit-reproducible per seed."""
    n = spec.n
    if spec.family == "path":
        edges = [(i, i + 1, _UNIT) for i in range(1, n)]
    elif spec.family == "cycle":
        edges = [(i, i + 1, _UNIT) for i in range(1, n)] + [(1, n, _UNIT)]
    elif spec.family == "complete":
        edges = [(i, j, _UNIT) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif spec.family == "star":
        edges = [(1, i, _UNIT) for i in range(2, n + 1)]
    elif spec.family == "erdos-renyi":
        edges = _erdos_renyi(n, float(spec.param), spec.seed)
    else:
        edges = _barabasi_albert(n, int(spec.param), spec.seed)
    return build_graph(n, edges)


def _erdos_renyi(n: int, p: float, seed: int) -> list[tuple[int, int, Fraction]]:
    rng = spawn_rng(seed)
    # one uniform draw per unordered pair, row-major over i < j
    draws = rng.random(n * (n - 1) // 2)
    edges = []
    k = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if draws[k] < p:
                edges.append((i, j, _UNIT))
            k += 1
    return edges


def _barabasi_albert(n: int, m: int, seed: int) -> list[tuple[int, int, Fraction]]:
    rng = spawn_rng(seed)
    edges = [(i, j, _UNIT) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    degree = [0] * (n + 1)
    for i in range(1, m + 1):
        degree[i] = m - 1
    for v in range(m + 1, n + 1):
        candidates = list(range(1, v))
        arrival_degree = degree[:]  # frozen while v picks its m targets
        targets = []
        for _ in range(m):
            weights = [arrival_degree[c] for c in candidates]
            total = sum(weights)
            if total == 0:
                pick = candidates[int(rng.integers(0, len(candidates)))]
            else:
                r = rng.random() * total
                acc = 0.0
                pick = candidates[-1]
                for c, w in zip(candidates, weights):
                    acc += w
                    if r < acc:
                        pick = c
                        break
            targets.append(pick)
            candidates.remove(pick)
        for t in targets:
            edges.append((t, v, _UNIT))
            degree[t] += 1
            degree[v] += 1
    return edges


def resample_until_connected(spec: GenSpec, max_attempts: int = 100) -> tuple[Graph, int]:
    """First connected sample and the number of attempts it took.

    Attempt k regenerates with the child seed derived from (seed, k), so
    the whole retry sequence is reproducible. Only random families may
    be resampled.
    """
    if spec.family not in RANDOM_FAMILIES:
        raise GraphValidationError(
            f"resampling applies to random families only, not {spec.family!r}"
        )
    if max_attempts < 1:
        raise GraphValidationError("max_attempts must be >= 1")
    for attempt in range(1, max_attempts + 1):
        g = generate(GenSpec(spec.family, spec.n, spec.param,
                             seed=derive_seed(spec.seed, attempt)))
        if is_connected(g):
            return g, attempt
    raise GenerationError(
        f"no connected {spec.family} sample in {max_attempts} attempts "
        f"(n={spec.n}, param={spec.param}, seed={spec.seed})"
    )
