"""HTTP service wrapping the library, one endpoint per operation.

Run with `ctrlbound serve` or `uvicorn ctrlbound.service.app:app`.
Domain errors (disconnected input, infeasible selection, invalid graph
data) map to 400; malformed request bodies are FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bounds import delta_bound, dl_vectors, report_json
from ..ctrb import check_lemma1, check_theorem, ctrb_matrix, input_matrix, rank
from ..errors import DomainError
from ..experiments import ExperimentSpec, emit_csv, rows_json, run_experiment
from ..generators import GenSpec, generate, resample_until_connected
from ..graph import bfs_distances, format_edge_list, laplacian
from ..select import SelectionProblem, select_leaders
from . import schemas as s

app = FastAPI(
    title="ctrlbound",
    version=__version__,
    description="Distance-based controllability bounds for leader-follower networks",
)


@app.exception_handler(DomainError)
async def domain_error_handler(_: Request, exc: DomainError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def value_error_handler(_: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/distances", response_model=s.DistancesResponse)
def distances(req: s.DistancesRequest):
    g = req.graph.to_graph()
    return s.DistancesResponse(n=g.n, directed=g.directed, dist=bfs_distances(g))


@app.post("/bound", response_model=s.BoundResponse)
def bound(req: s.BoundRequest):
    g = req.graph.to_graph()
    dl = dl_vectors(g, req.leaders)
    return s.BoundResponse(**report_json(g, dl, delta_bound(dl)))


@app.post("/rank", response_model=s.RankResponse, response_model_exclude_none=True)
def ctrb_rank(req: s.RankRequest):
    g = req.graph.to_graph()
    leaders = sorted(set(req.leaders))
    gamma = ctrb_matrix(laplacian(g), input_matrix(g.n, leaders))
    rep = rank(gamma, mode=req.mode, tolerance=req.tolerance)
    return s.RankResponse(n=g.n, leaders=leaders, rank=rep.rank,
                          method=rep.method, tolerance=rep.tolerance)


@app.post("/check/lemma1", response_model=s.VerdictResponse,
          response_model_exclude_none=True)
def lemma1(req: s.CheckLemmaRequest):
    v = check_lemma1(req.graph.to_graph(), trials=req.trials, seed=req.seed)
    return s.VerdictResponse(**v.__dict__)


@app.post("/check/theorem", response_model=s.VerdictResponse,
          response_model_exclude_none=True)
def theorem(req: s.CheckTheoremRequest):
    v = check_theorem(req.graph.to_graph(), req.leaders,
                      trials=req.trials, seed=req.seed)
    return s.VerdictResponse(**v.__dict__)


@app.post("/select-leaders", response_model=s.SelectResponse)
def select(req: s.SelectRequest):
    problem = SelectionProblem(req.graph.to_graph(), k=req.k,
                               mode=req.mode, budget=req.budget)
    r = select_leaders(problem)
    return s.SelectResponse(leaders=list(r.leaders), delta=r.delta,
                            optimal=r.optimal, sets_evaluated=r.sets_evaluated)


@app.post("/generate", response_model=s.GenResponse, response_model_exclude_none=True)
def gen(req: s.GenRequest):
    spec = GenSpec(req.family, req.n, req.param, seed=req.seed)
    attempts = None
    if req.connected:
        g, attempts = resample_until_connected(spec, max_attempts=req.max_attempts)
    else:
        g = generate(spec)
    return s.GenResponse(graph=s.GraphModel.from_graph(g),
                         edge_list=format_edge_list(g), attempts=attempts)


@app.post("/experiment", response_model=s.ExperimentResponse)
def experiment(req: s.ExperimentRequest):
    spec = ExperimentSpec(
        family=req.family, grid=tuple(req.grid or ()), n=req.n,
        trials=req.trials, leaders_per_trial=req.leaders_per_trial, seed=req.seed,
    )
    rows = run_experiment(spec)
    return s.ExperimentResponse(family=spec.family, rows=rows_json(rows),
                                csv=emit_csv(rows))
