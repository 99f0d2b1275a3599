"""Shared fixtures for mwlab tests."""

import itertools
import json

import pytest

from algebra.field import field_make
from codes.linear_code import code_from_generator


@pytest.fixture
def f2():
    """The binary field."""
    return field_make(2)


@pytest.fixture
def f3():
    return field_make(3)


@pytest.fixture
def f4():
    """F_4 with modulus x^2 + x + 1; label 2 is omega."""
    return field_make(4)


@pytest.fixture
def rep3(f2):
    """The [3,1] binary repetition code {000, 111}."""
    return code_from_generator(f2, [[1, 1, 1]])


@pytest.fixture
def selfdual2(f2):
    """The self-dual code {00, 11}."""
    return code_from_generator(f2, [[1, 1]])


@pytest.fixture
def zero1(f2):
    """The zero code in F_2^1."""
    return code_from_generator(f2, [], n=1)


@pytest.fixture
def full2(f2):
    """All of F_2^2."""
    return code_from_generator(f2, [[1, 0], [0, 1]])


@pytest.fixture
def code_file(tmp_path):
    """Write a code-file JSON object and return its path."""

    def write(data, name="code.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return path

    return write


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Run from an empty directory with no MWLAB_* variables set."""
    for key in ("MWLAB_BUDGET", "MWLAB_TRANSFORM_BUDGET", "MWLAB_SERIES_BUDGET", "MWLAB_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _all_binary_codes(n):
    """Every linear subspace of F_2^n, each exactly once."""
    f2 = field_make(2)
    vectors = [list(v) for v in itertools.product((0, 1), repeat=n) if any(v)]
    seen = {}
    for size in range(n + 1):
        for rows in itertools.combinations(vectors, size):
            code = code_from_generator(f2, list(rows), n=n)
            seen.setdefault(code, code)
    return list(seen)


@pytest.fixture
def all_binary_codes():
    """Factory listing every binary linear code of a given length."""
    return _all_binary_codes
