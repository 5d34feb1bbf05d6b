# lattice_spectra/records.py
"""
JSON payloads shared by the CLI and the HTTP API.

Every number is a decimal string so that arbitrarily large integers and
exact fractions survive any JSON consumer.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from .errors import SearchExhausted, SpectraError
from .exactnum import AnyValue, format_value, parse_value
from .qform import Discriminant, Form, UnimodularMap
from .repcount import RepSet
from .spectra import MultiplicitySet, MultiplicityTag, SampleResult, StatementReading, TorusFormData
from .witness import MultiplicityWitness, PrimeWitness


def _s(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    return format_value(v)


def _pairs(points) -> List[List[str]]:
    return [[str(x), str(y)] for x, y in points]


def _unpairs(rows) -> tuple:
    return tuple((int(x), int(y)) for x, y in rows)


def _target(text: str) -> Union[int, AnyValue]:
    try:
        return int(text)
    except ValueError:
        return parse_value(text)


# ============================================================
# Forms
# ============================================================

class FormRecord(BaseModel):
    a: str
    b: str
    c: str
    delta: str

    @classmethod
    def from_form(cls, f: Form) -> "FormRecord":
        return cls(a=str(f.a), b=str(f.b), c=str(f.c), delta=str(f.delta))

    def to_form(self) -> Form:
        return Form(int(self.a), int(self.b), int(self.c))


class DiscriminantRecord(BaseModel):
    delta: str
    delta0: str
    conductor: str

    @classmethod
    def from_discriminant(cls, d: Discriminant) -> "DiscriminantRecord":
        return cls(delta=str(d.delta), delta0=str(d.delta0), conductor=str(d.conductor))

    def to_discriminant(self) -> Discriminant:
        return Discriminant(int(self.delta), int(self.delta0), int(self.conductor))


class MapRecord(BaseModel):
    rows: List[List[str]]
    det: str

    @classmethod
    def from_map(cls, t: UnimodularMap) -> "MapRecord":
        return cls(rows=[[str(v) for v in row] for row in t.as_rows()], det=str(t.det))

    def to_map(self) -> UnimodularMap:
        (p, q), (r, s) = self.rows
        return UnimodularMap(int(p), int(q), int(r), int(s))


class ReductionRecord(BaseModel):
    form: FormRecord
    reduced: FormRecord
    certificate: MapRecord


class CompositionRecord(BaseModel):
    left: FormRecord
    right: FormRecord
    product: FormRecord


class ClassGroupRecord(BaseModel):
    delta: str
    h: str
    forms: List[FormRecord]

    @classmethod
    def from_forms(cls, delta: int, forms: List[Form]) -> "ClassGroupRecord":
        return cls(delta=str(delta), h=str(len(forms)), forms=[FormRecord.from_form(f) for f in forms])

    def to_forms(self) -> List[Form]:
        return [f.to_form() for f in self.forms]


class AutRecord(BaseModel):
    form: FormRecord
    order: str
    proper: List[MapRecord]
    improper: Optional[MapRecord] = None


class AmbiguityRecord(BaseModel):
    form: FormRecord
    ambiguous: bool
    improper: Optional[MapRecord] = None


# ============================================================
# Counts
# ============================================================

class RepSetRecord(BaseModel):
    target: str
    R: str
    r_plus: Optional[str] = None
    r_full: Optional[str] = None
    primitive: str
    solutions: List[List[str]]

    @classmethod
    def from_rep_set(cls, rs: RepSet) -> "RepSetRecord":
        return cls(
            target=_s(rs.target),
            R=str(rs.R),
            r_plus=None if rs.R_plus is None else str(rs.R_plus),
            r_full=None if rs.R_full is None else str(rs.R_full),
            primitive=str(rs.primitive_count),
            solutions=_pairs(rs.solutions),
        )

    def to_rep_set(self) -> RepSet:
        return RepSet(
            target=_target(self.target),
            solutions=_unpairs(self.solutions),
            R=int(self.R),
            R_plus=None if self.r_plus is None else int(self.r_plus),
            R_full=None if self.r_full is None else int(self.r_full),
            primitive_count=int(self.primitive),
        )


class QuadrantRecord(BaseModel):
    m: str
    n: str
    N: str
    count: str
    solutions: List[List[str]]


class HistogramRecord(BaseModel):
    form: FormRecord
    n_max: str
    histogram: Dict[str, str]

    @classmethod
    def from_histogram(cls, form: Form, n_max: int, hist: Dict[int, int]) -> "HistogramRecord":
        return cls(
            form=FormRecord.from_form(form),
            n_max=str(n_max),
            histogram={str(k): str(v) for k, v in hist.items()},
        )

    def to_histogram(self) -> Dict[int, int]:
        return {int(k): int(v) for k, v in self.histogram.items()}


# ============================================================
# Witnesses
# ============================================================

class PrimeRecord(BaseModel):
    p: str
    rep: List[str]
    form: FormRecord

    @classmethod
    def from_witness(cls, w: PrimeWitness) -> "PrimeRecord":
        return cls(p=str(w.p), rep=[str(w.rep[0]), str(w.rep[1])], form=FormRecord.from_form(w.form))

    def to_witness(self) -> PrimeWitness:
        return PrimeWitness(p=int(self.p), rep=(int(self.rep[0]), int(self.rep[1])), form=self.form.to_form())


class WitnessRecord(BaseModel):
    kind: str
    k: str
    value: str
    prime: Optional[str] = None
    solutions: List[List[str]]
    trace_length: str
    extra: Dict[str, str] = Field(default_factory=dict)
    eigenvalue: Optional[str] = None

    @classmethod
    def from_witness(cls, w: MultiplicityWitness, eigenvalue: Optional[str] = None) -> "WitnessRecord":
        return cls(
            kind=w.kind,
            k=str(w.target_count),
            value=str(w.value),
            prime=None if w.prime is None else str(w.prime),
            solutions=_pairs(w.solutions),
            trace_length=str(w.trace_length),
            extra={k: str(v) for k, v in w.extra.items()},
            eigenvalue=eigenvalue,
        )

    def to_witness(self) -> MultiplicityWitness:
        return MultiplicityWitness(
            kind=self.kind,
            target_count=int(self.k),
            value=int(self.value),
            solutions=_unpairs(self.solutions),
            prime=None if self.prime is None else int(self.prime),
            trace_length=int(self.trace_length),
            extra={k: int(v) for k, v in self.extra.items()},
        )


# ============================================================
# Spectra
# ============================================================

class StatementReadingRecord(BaseModel):
    alpha: str
    beta: str
    value: str
    set: str
    consistent: bool

    @classmethod
    def from_reading(cls, r: StatementReading) -> "StatementReadingRecord":
        return cls(alpha=_s(r.alpha), beta=_s(r.beta), value=_s(r.value), set=r.tag.value, consistent=r.consistent)

    def to_reading(self) -> StatementReading:
        return StatementReading(
            alpha=Fraction(self.alpha),
            beta=Fraction(self.beta),
            value=Fraction(self.value),
            tag=MultiplicityTag(self.set),
            consistent=self.consistent,
        )


class ClassificationRecord(BaseModel):
    set: str
    case: str
    delta: Optional[str] = None
    statement_reading: Optional[StatementReadingRecord] = None

    @classmethod
    def from_set(cls, ms: MultiplicitySet) -> "ClassificationRecord":
        return cls(
            set=ms.tag.value,
            case=ms.case,
            delta=None if ms.delta is None else str(ms.delta),
            statement_reading=(
                None if ms.statement_reading is None else StatementReadingRecord.from_reading(ms.statement_reading)
            ),
        )

    def to_set(self) -> MultiplicitySet:
        return MultiplicitySet(
            tag=MultiplicityTag(self.set),
            case=self.case,
            delta=None if self.delta is None else int(self.delta),
            statement_reading=None if self.statement_reading is None else self.statement_reading.to_reading(),
        )


class TorusFormRecord(BaseModel):
    alpha: str
    beta: str
    gamma: str
    delta: str
    tau: str
    form: FormRecord
    discriminant: DiscriminantRecord

    @classmethod
    def from_data(cls, d: TorusFormData) -> "TorusFormRecord":
        return cls(
            alpha=str(d.alpha),
            beta=str(d.beta),
            gamma=str(d.gamma),
            delta=str(d.delta),
            tau=str(d.tau),
            form=FormRecord.from_form(d.form),
            discriminant=DiscriminantRecord.from_discriminant(d.discriminant),
        )

    def to_data(self) -> TorusFormData:
        return TorusFormData(
            alpha=int(self.alpha),
            beta=int(self.beta),
            gamma=int(self.gamma),
            delta=int(self.delta),
            tau=int(self.tau),
            form=self.form.to_form(),
            discriminant=self.discriminant.to_discriminant(),
        )


class MultiplicityRecord(BaseModel):
    multiplicity: str
    level: Optional[str] = None
    generator: Optional[List[str]] = None
    solutions: List[List[str]] = Field(default_factory=list)


class SampleRecord(BaseModel):
    observed: List[str]
    levels: str
    generators: Dict[str, List[str]]

    @classmethod
    def from_sample(cls, s: SampleResult) -> "SampleRecord":
        return cls(
            observed=[str(m) for m in s.observed],
            levels=str(s.levels),
            generators={str(m): [str(pt[0]), str(pt[1])] for m, pt in s.generators.items()},
        )

    def to_sample(self) -> SampleResult:
        return SampleResult(
            observed=tuple(int(m) for m in self.observed),
            levels=int(self.levels),
            generators={int(m): (int(pt[0]), int(pt[1])) for m, pt in self.generators.items()},
        )


class ErrorRecord(BaseModel):
    error: str
    kind: str
    bound: Optional[str] = None

    @classmethod
    def from_exception(cls, exc: SpectraError) -> "ErrorRecord":
        if isinstance(exc, SearchExhausted):
            return cls(error=str(exc), kind="exhausted", bound=str(exc.bound))
        return cls(error=str(exc), kind="domain")


def dump(record: BaseModel) -> str:
    return record.model_dump_json(exclude_none=True)
