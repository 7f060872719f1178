"""
Main application module for the satpos HTTP service.
"""
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from satpos.api import router as satpos_router
from satpos.config import configure_logging
from satpos.errors import SatposError
from satpos.models import ErrorDocument

configure_logging()

app = FastAPI(
    title="satpos",
    description="Exact Ehrhart indices, saturation analysis and representation-theoretic multiplicities.",
    version="1.0.0",
)

app.include_router(satpos_router)


@app.get("/", tags=["root"])
async def root():
    """Root endpoint that returns basic API information."""
    return {
        "name": "satpos",
        "version": "1.0.0",
        "description": "Exact Ehrhart indices, saturation analysis and representation-theoretic multiplicities.",
    }


@app.get("/health", tags=["health"])
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}


@app.exception_handler(SatposError)
async def satpos_exception_handler(request: Request, exc: SatposError):
    """Domain errors that escape an endpoint become 400 responses."""
    return JSONResponse(
        status_code=400,
        content={"detail": ErrorDocument(error=type(exc).__name__, message=str(exc),
                                         details=exc.details or None).model_dump(exclude_none=True)},
    )


if __name__ == "__main__":
    import uvicorn
    uvicorn.run("satpos.main:app", host="0.0.0.0", port=8000, reload=True)
