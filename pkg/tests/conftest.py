"""Shared fixtures and sweep helpers."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import settings

from mufilt import Signature

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture
def ref_sig():
    """The worked signature used by most numeric fixtures: f=2, p=7, h=3,
    q=(1,2), whose constants and thresholds are known exactly."""
    return Signature(f=2, p=7, h=3, q=(1, 2))


def iter_signatures(fmax, hmax, primes):
    for f in range(1, fmax + 1):
        for h in range(1, hmax + 1):
            for p in primes:
                for q in product(range(h + 1), repeat=f):
                    yield Signature(f=f, p=p, h=h, q=tuple(q))


def frac(a, b=1):
    return Fraction(a, b)
