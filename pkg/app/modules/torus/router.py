from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings
from app.core.errors import IrregularSubgroupError

from .characters import OneParamSubgroup
from .service import TorusService

router = APIRouter(prefix="/torus", tags=["Torus"])

DEFAULT_OPS = ",".join(str(value) for value in settings.DEFAULT_OPS)


def _parse_ops(ops: str) -> OneParamSubgroup:
    try:
        return OneParamSubgroup.parse(ops)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@router.get("/fixed-points")
def fixed_points():
    return {"fixed_points": TorusService.fixed_points_payload()}


@router.get("/weights")
def weights():
    return {"weights": TorusService.weights_payload()}


@router.get("/bb")
def bb(ops: str = Query(DEFAULT_OPS)):
    g = _parse_ops(ops)
    try:
        return TorusService.bb_payload(g)
    except IrregularSubgroupError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@router.get("/poincare")
def poincare_polynomial(ops: str = Query(DEFAULT_OPS)):
    g = _parse_ops(ops)
    try:
        return TorusService.poincare_payload(g)
    except IrregularSubgroupError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@router.get("/orbits")
def orbits():
    return TorusService.orbits_payload()
