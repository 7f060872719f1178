"""
HTTP endpoints exposing the library operations.
"""
import logging
from typing import Any, Dict, Optional

from fastapi import APIRouter, HTTPException, Query
from pydantic import BaseModel, Field

from satpos.combinat import as_partition, kostka, kostka_bounded_height, lr_coefficient
from satpos.config import settings
from satpos.errors import SatposError
from satpos.models import ErrorDocument, PolytopeDocument
from satpos.multiplicity import TensorEmbedding, klimyk_branching, kronecker_char, kronecker_two_row, syminv_hilbert
from satpos.polytope import HPolytope
from satpos.satip import ehrhart_index, ehrhart_quasipoly

logger = logging.getLogger(__name__)

router = APIRouter(tags=["satpos"])


class QuasiPolynomialRequest(BaseModel):
    """Polytope together with the fitting bounds."""
    polytope: PolytopeDocument
    period_bound: int = Field(default_factory=lambda: settings.stretch_period_bound, ge=1)
    degree_bound: Optional[int] = Field(None, ge=0)


def _domain_error(e: SatposError) -> HTTPException:
    logger.warning(f"{type(e).__name__}: {e}")
    doc = ErrorDocument(error=type(e).__name__, message=str(e), details=e.details or None)
    return HTTPException(status_code=400, detail=doc.model_dump(exclude_none=True))


def _bad_input(e: ValueError) -> HTTPException:
    return HTTPException(status_code=422, detail={"error": type(e).__name__, "message": str(e)})


@router.get("/lr")
async def lr(
    alpha: str = Query(..., description="Partition, e.g. 2,1"),
    beta: str = Query(..., description="Partition"),
    lam: str = Query(..., alias="lambda", description="Partition"),
) -> Dict[str, Any]:
    """Littlewood-Richardson coefficient by the LR rule."""
    try:
        return {"alpha": alpha, "beta": beta, "lambda": lam, "coefficient": lr_coefficient(alpha, beta, lam)}
    except ValueError as e:
        raise _bad_input(e)


@router.get("/kostka")
async def kostka_number(
    lam: str = Query(..., alias="lambda", description="Partition"),
    content: str = Query(..., description="Comma-separated content"),
    method: str = Query("dp", pattern="^(dp|gt)$"),
) -> Dict[str, Any]:
    """Kostka number by strip recursion or Gelfand-Tsetlin counting."""
    try:
        weights = [int(v) for v in content.split(",") if v.strip()]
        count = kostka_bounded_height if method == "gt" else kostka
        return {"lambda": lam, "content": weights, "method": method, "kostka": count(lam, weights)}
    except ValueError as e:
        raise _bad_input(e)


@router.get("/kronecker/{method}")
async def kronecker(
    method: str,
    lam: str = Query(..., alias="lambda"),
    mu: str = Query(...),
    pi: str = Query(...),
    guard: Optional[int] = Query(None, ge=1),
) -> Dict[str, Any]:
    """Kronecker coefficient g(lambda, mu, pi) by char, tworow or klimyk."""
    try:
        if method == "char":
            value = kronecker_char(lam, mu, pi, guard=guard)
        elif method == "tworow":
            value = kronecker_two_row(lam, mu, pi)
        elif method == "klimyk":
            a, b = max(1, as_partition(lam).height), max(1, as_partition(mu).height)
            value = klimyk_branching(a * b, TensorEmbedding(a=a, b=b), pi, (lam, mu))
        else:
            raise HTTPException(status_code=404, detail=f"Unknown method {method}")
    except SatposError as e:
        raise _domain_error(e)
    except ValueError as e:
        raise _bad_input(e)
    return {"method": method, "lambda": lam, "mu": mu, "pi": pi, "kronecker": value}


@router.post("/ehrhart/index")
async def ehrhart_index_endpoint(polytope: PolytopeDocument) -> Dict[str, Any]:
    """Index of the Ehrhart quasi-polynomial via the Smith normal form."""
    try:
        return {"index": ehrhart_index(HPolytope.from_document(polytope))}
    except SatposError as e:
        raise _domain_error(e)
    except ValueError as e:
        raise _bad_input(e)


@router.post("/ehrhart/quasipoly")
async def ehrhart_quasipoly_endpoint(request: QuasiPolynomialRequest) -> Dict[str, Any]:
    """Fitted Ehrhart quasi-polynomial."""
    try:
        P = HPolytope.from_document(request.polytope)
        f = ehrhart_quasipoly(P, request.period_bound, request.degree_bound)
    except SatposError as e:
        raise _domain_error(e)
    except ValueError as e:
        raise _bad_input(e)
    return {"quasipolynomial": f.to_document().model_dump(), "text": str(f)}


@router.get("/hilbert/syminv")
async def hilbert_syminv(
    k: int = Query(..., ge=1),
    n: int = Query(12, ge=1, description="Sample horizon"),
) -> Dict[str, Any]:
    """Hilbert quasi-polynomial of the symmetric invariants in k variables."""
    try:
        f = syminv_hilbert(k, n)
    except SatposError as e:
        raise _domain_error(e)
    return {"k": k, "n": n, "quasipolynomial": f.to_document().model_dump(), "text": str(f)}
