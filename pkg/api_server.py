# api_server.py
from typing import Optional

from fastapi import FastAPI, Header, HTTPException
from pydantic import BaseModel
from fastapi.middleware.cors import CORSMiddleware

from lattice_spectra import __version__
from lattice_spectra import qform, repcount, spectra, witness
from lattice_spectra.config import settings
from lattice_spectra.errors import SearchExhausted, SpectraError
from lattice_spectra.qform import Form
from lattice_spectra.records import (
    ClassGroupRecord,
    ClassificationRecord,
    ErrorRecord,
    RepSetRecord,
    WitnessRecord,
)

# Single FastAPI app (do NOT re-create later)
app = FastAPI(title="Lattice Spectra API", version=__version__)

# Read-only endpoints; wide-open CORS is fine here.
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=False,      # must be False when allow_origins=["*"]
    allow_methods=["*"],
    allow_headers=["*"],          # Content-Type, X-API-Key, etc.
)


class TorusReq(BaseModel):
    rcos: str
    rsq: str


class RectReq(BaseModel):
    ratio_sq: str


class RepsReq(BaseModel):
    form: str
    n: int
    primitive: bool = False


class SurjectivityReq(BaseModel):
    form: str
    k: int
    bound: Optional[int] = None


def _check_key(x_api_key: Optional[str]) -> None:
    # Optional API key check
    if settings.API_KEY and x_api_key != settings.API_KEY:
        raise HTTPException(status_code=401, detail="Unauthorized")


def _http_error(exc: SpectraError) -> HTTPException:
    status = 409 if isinstance(exc, SearchExhausted) else 422
    return HTTPException(status_code=status, detail=ErrorRecord.from_exception(exc).model_dump(exclude_none=True))


@app.get("/")
def root():
    return {"status": "ok", "service": "lattice-spectra-api", "version": __version__}


@app.get("/healthz")
def healthz():
    return {
        "status": "ok",
        "env": settings.ENV,
        "search_bound": str(settings.SEARCH_BOUND),
        "box": str(settings.BOX),
    }


@app.post("/torus/classify", response_model=ClassificationRecord, response_model_exclude_none=True)
def torus_classify(req: TorusReq, x_api_key: Optional[str] = Header(default=None)):
    _check_key(x_api_key)
    try:
        ms = spectra.torus_classify(spectra.TorusSpec.parse(req.rcos, req.rsq))
    except SpectraError as exc:
        raise _http_error(exc) from exc
    return ClassificationRecord.from_set(ms)


@app.post("/rect/classify", response_model=ClassificationRecord, response_model_exclude_none=True)
def rect_classify(req: RectReq, x_api_key: Optional[str] = Header(default=None)):
    _check_key(x_api_key)
    try:
        ms = spectra.rect_classify(spectra.RectangleSpec.parse(req.ratio_sq))
    except SpectraError as exc:
        raise _http_error(exc) from exc
    return ClassificationRecord.from_set(ms)


@app.post("/count/reps", response_model=RepSetRecord, response_model_exclude_none=True)
def count_reps(req: RepsReq, x_api_key: Optional[str] = Header(default=None)):
    _check_key(x_api_key)
    try:
        form = Form.parse(req.form)
        rs = repcount.primitive_representations(form, req.n) if req.primitive else repcount.representations(form, req.n)
    except SpectraError as exc:
        raise _http_error(exc) from exc
    return RepSetRecord.from_rep_set(rs)


@app.get("/qform/classgroup/{delta}", response_model=ClassGroupRecord)
def classgroup(delta: int, x_api_key: Optional[str] = Header(default=None)):
    _check_key(x_api_key)
    try:
        forms = qform.class_group(delta)
    except SpectraError as exc:
        raise _http_error(exc) from exc
    return ClassGroupRecord.from_forms(delta, forms)


@app.post("/witness/surjectivity", response_model=WitnessRecord, response_model_exclude_none=True)
def surjectivity(req: SurjectivityReq, x_api_key: Optional[str] = Header(default=None)):
    _check_key(x_api_key)
    try:
        w = witness.surjectivity_witness(Form.parse(req.form), req.k, req.bound)
    except SpectraError as exc:
        raise _http_error(exc) from exc
    return WitnessRecord.from_witness(w)
