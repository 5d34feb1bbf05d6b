# lattice_spectra/config.py
from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()


def parse_int(raw: str) -> int:
    # accept 1e6 / 10**18 / 1_000_000 style values; exponents must be >= 0
    raw = raw.strip().replace("_", "")
    if "**" in raw:
        base, exp = raw.split("**", 1)
        return int(base) ** _exponent(exp, raw)
    if "e" in raw.lower():
        mant, exp = raw.lower().split("e", 1)
        return int(mant) * 10 ** _exponent(exp, raw)
    return int(raw)


def _exponent(text: str, raw: str) -> int:
    e = int(text)
    if e < 0:
        raise ValueError(f"{raw!r} is not an integer (negative exponent)")
    return e


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    return parse_int(raw)


class Settings:
    ENV: str
    SEARCH_BOUND: int
    VALUE_BOUND: int
    BOX: int
    SQUAREFREE_BOUND: int
    LOG_LEVEL: str
    API_KEY: str | None

    def __init__(self):
        # "local" by default; the API deployment sets LATTICE_ENV=production
        self.ENV = os.getenv("LATTICE_ENV", "local")

        # Caps for every search. Defaults keep witness values inside the
        # deterministic Miller-Rabin range.
        self.SEARCH_BOUND = _int_env("LATTICE_SEARCH_BOUND", 1_000_000)
        self.VALUE_BOUND = _int_env("LATTICE_VALUE_BOUND", 10**18)
        self.BOX = _int_env("LATTICE_BOX", 15)
        self.SQUAREFREE_BOUND = _int_env("LATTICE_SQUAREFREE_BOUND", 1_000_000)

        self.LOG_LEVEL = os.getenv("LATTICE_LOG_LEVEL", "WARNING").upper()
        self.API_KEY = os.getenv("LATTICE_API_KEY")


settings = Settings()
