"""Seeded random sampling of exact parameters."""

import os
import random
from fractions import Fraction

from .scalar import Scalar

DEFAULT_SEED = 20240917


def seed_from_env():
    raw = os.environ.get("GAPVIR_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"GAPVIR_SEED must be an integer, got {raw!r}") from None


def rng(seed=None, salt=""):
    base = seed_from_env() if seed is None else seed
    return random.Random(f"{base}:{salt}")


def rational(r, num=6, den=4, nonzero=False):
    while True:
        q = Fraction(r.randint(-num, num), r.randint(1, den))
        if q or not nonzero:
            return q


def scalar(r, nonzero=False, complex_rate=0.25):
    while True:
        re = rational(r)
        im = rational(r) if r.random() < complex_rate else 0
        s = Scalar(re, im)
        if s or not nonzero:
            return s
