import json

from lattice_spectra.errors import DomainError, SearchExhausted
from lattice_spectra.qform import Form, class_group, reduce
from lattice_spectra.records import (
    ClassGroupRecord,
    ClassificationRecord,
    ErrorRecord,
    HistogramRecord,
    MapRecord,
    RepSetRecord,
    SampleRecord,
    TorusFormRecord,
    WitnessRecord,
    dump,
)
from lattice_spectra.repcount import representations, representations_irrational
from lattice_spectra.exactnum import parse_value
from lattice_spectra.spectra import TorusSpec, multiplicity_set_sample, torus_classify, torus_form
from lattice_spectra.witness import multiplicity_histogram, surjectivity_witness


def test_classification_with_reading_survives_json():
    ms = torus_classify(TorusSpec.parse("sqrt(2)", "2+sqrt(2)"))
    rec = ClassificationRecord.model_validate_json(dump(ClassificationRecord.from_set(ms)))
    assert rec.to_set() == ms


def test_irrational_target_is_kept_as_text():
    rs = representations_irrational(parse_value("sqrt(2)"), 1, parse_value("5+2*sqrt(2)"))
    payload = json.loads(dump(RepSetRecord.from_rep_set(rs)))
    assert payload["target"] == "5+2*sqrt(2)"
    assert "r_plus" not in payload
    assert RepSetRecord(**payload).to_rep_set() == rs


def test_integer_rep_set():
    rs = representations(Form(1, 0, 1), 25)
    assert RepSetRecord.from_rep_set(rs).to_rep_set() == rs


def test_witness_record_carries_extra():
    w = surjectivity_witness(Form(1, 0, 1), 3)
    rec = WitnessRecord.from_witness(w)
    assert rec.extra == {"n0": "1"}
    assert rec.to_witness() == w


def test_torus_form_and_map_records():
    data = torus_form(TorusSpec.parse("1/3", "2/3"))
    assert TorusFormRecord.from_data(data).to_data() == data
    _reduced, t = reduce(Form(10, 14, 5))
    assert MapRecord.from_map(t).to_map() == t


def test_error_records():
    exhausted = ErrorRecord.from_exception(SearchExhausted("stop", bound=7))
    assert (exhausted.kind, exhausted.bound) == ("exhausted", "7")
    domain = ErrorRecord.from_exception(DomainError("bad"))
    assert json.loads(dump(domain)) == {"error": "bad", "kind": "domain"}


def test_class_group_record_survives_json():
    forms = class_group(-23)
    rec = ClassGroupRecord.model_validate_json(dump(ClassGroupRecord.from_forms(-23, forms)))
    assert rec.h == "3"
    assert rec.to_forms() == forms


def test_histogram_record_survives_json():
    form = Form(1, 0, 1)
    hist = multiplicity_histogram(form, 50)
    rec = HistogramRecord.model_validate_json(dump(HistogramRecord.from_histogram(form, 50, hist)))
    assert rec.to_histogram() == hist
    assert sum(rec.to_histogram().values()) == 50


def test_sample_record_survives_json():
    s = multiplicity_set_sample(TorusSpec.parse("1/2", "1"), 60)
    rec = SampleRecord.model_validate_json(dump(SampleRecord.from_sample(s)))
    assert rec.to_sample() == s
    assert min(rec.to_sample().observed) == 6
