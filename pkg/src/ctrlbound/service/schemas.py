"""Pydantic request/response models for the HTTP service.

Weights travel as strings in canonical edge-list form ("3", "1/2",
"0.25") so exact rationals survive the JSON round trip; plain ints and
floats are also accepted on input.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field

from ..graph import Graph, weight_from_text, weight_to_text


class EdgeModel(BaseModel):
    u: int
    v: int
    w: Union[int, float, str] = 1


class GraphModel(BaseModel):
    n: int
    directed: bool = False
    edges: list[EdgeModel] = Field(default_factory=list)

    def to_graph(self) -> Graph:
        edges = []
        for e in self.edges:
            w = weight_from_text(e.w) if isinstance(e.w, str) else e.w
            edges.append((e.u, e.v, w))
        return Graph(n=self.n, directed=self.directed, edges=tuple(edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(
            n=g.n,
            directed=g.directed,
            edges=[EdgeModel(u=u, v=v, w=weight_to_text(w)) for u, v, w in g.edges],
        )


class DistancesRequest(BaseModel):
    graph: GraphModel


class DistancesResponse(BaseModel):
    n: int
    directed: bool
    dist: list[list[Optional[int]]]


class BoundRequest(BaseModel):
    graph: GraphModel
    leaders: list[int]


class WitnessModel(BaseModel):
    nodes: list[int]
    alphas: list[int]


class BoundResponse(BaseModel):
    n: int
    directed: bool
    leaders: list[int]
    delta: int
    mu: int
    upsilon: int
    witness: WitnessModel


class RankRequest(BaseModel):
    graph: GraphModel
    leaders: list[int]
    mode: str = "auto"
    tolerance: Optional[float] = None


class RankResponse(BaseModel):
    n: int
    leaders: list[int]
    rank: int
    method: str
    tolerance: Optional[float] = None


class CheckLemmaRequest(BaseModel):
    graph: GraphModel
    trials: int = 5
    seed: int = 0


class CheckTheoremRequest(BaseModel):
    graph: GraphModel
    leaders: list[int]
    trials: int = 5
    seed: int = 0


class VerdictResponse(BaseModel):
    property: str
    trials: int
    passed: bool
    counterexample: Optional[dict] = None
    details: dict = Field(default_factory=dict)


class SelectRequest(BaseModel):
    graph: GraphModel
    k: int
    mode: str = "exhaustive"
    budget: Optional[int] = None


class SelectResponse(BaseModel):
    leaders: list[int]
    delta: int
    optimal: bool
    sets_evaluated: int


class GenRequest(BaseModel):
    family: str
    n: int
    param: Optional[float] = None
    seed: int = 0
    connected: bool = False
    max_attempts: int = 100


class GenResponse(BaseModel):
    graph: GraphModel
    edge_list: str
    attempts: Optional[int] = None


class ExperimentRequest(BaseModel):
    family: str
    grid: Optional[list[float]] = None
    n: int = 50
    trials: int = 50
    leaders_per_trial: int = 2
    seed: int = 0


class ExperimentRowModel(BaseModel):
    param: float
    mean_delta: float
    mean_mu: float
    mean_upsilon: float
    trials_used: int


class ExperimentResponse(BaseModel):
    family: str
    rows: list[ExperimentRowModel]
    csv: str
