import pytest

from lattice_spectra.config import Settings, parse_int


@pytest.mark.parametrize("raw, expected", [
    ("1000000", 1_000_000),
    ("1_000_000", 1_000_000),
    ("1e6", 1_000_000),
    ("3E2", 300),
    ("10**18", 10**18),
    (" 2**0 ", 1),
])
def test_parse_int(raw, expected):
    value = parse_int(raw)
    assert value == expected
    assert type(value) is int


@pytest.mark.parametrize("raw", ["5e-1", "1e-6", "2**-3", "1.5", "ten", ""])
def test_parse_int_rejects_non_integers(raw):
    with pytest.raises(ValueError):
        parse_int(raw)


def test_settings_read_the_environment(monkeypatch):
    monkeypatch.setenv("LATTICE_BOX", "7")
    monkeypatch.setenv("LATTICE_VALUE_BOUND", "10**12")
    monkeypatch.setenv("LATTICE_LOG_LEVEL", "debug")
    s = Settings()
    assert (s.BOX, s.VALUE_BOUND, s.LOG_LEVEL) == (7, 10**12, "DEBUG")


def test_settings_reject_a_fractional_bound(monkeypatch):
    monkeypatch.setenv("LATTICE_SEARCH_BOUND", "5e-1")
    with pytest.raises(ValueError):
        Settings()
