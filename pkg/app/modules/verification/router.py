from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings

from .schemas import VerificationResponse
from .service import UnknownSuiteError, VerificationService

router = APIRouter(prefix="/verify", tags=["Verification"])


@router.get("/{suite}", response_model=VerificationResponse)
async def verify_suite(
    suite: str,
    seed: int = Query(settings.DEFAULT_SEED),
    samples: int = Query(settings.DEFAULT_SAMPLES, ge=1, le=10000),
):
    try:
        report = await VerificationService.run(suite, seed, samples)
    except UnknownSuiteError:
        raise HTTPException(
            status_code=404,
            detail=f"Unknown suite '{suite}'. Expected one of: {', '.join(VerificationService.suite_names())}",
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return VerificationResponse(report=report, summary=report.summary())
