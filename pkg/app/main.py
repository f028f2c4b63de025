from contextlib import asynccontextmanager
import uuid
from typing import Any

from fastapi import FastAPI, Request

from app import __version__
from app.core.config import settings
from app.core.logging_setup import configure_logging
from app.core.observability import observability
from app.core.startup_checks import validate_fixtures
from app.modules.torus.router import router as torus_router
from app.modules.verification.router import router as verification_router


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging(settings.LOG_JSON)
    validate_fixtures()
    yield


app = FastAPI(title="X_min verification engine", version=__version__, lifespan=lifespan)


@app.middleware("http")
async def capture_metrics(request: Request, call_next):
    request_id = request.headers.get("x-request-id") or str(uuid.uuid4())
    request.state.request_id = request_id

    response = await observability.track_request(request, call_next)
    response.headers["x-request-id"] = request_id
    return response


@app.get("/health/live")
def liveness() -> dict[str, str]:
    return {"status": "ok"}


@app.get("/metrics")
def metrics() -> dict[str, Any]:
    return observability.snapshot()


app.include_router(verification_router)
app.include_router(torus_router)
