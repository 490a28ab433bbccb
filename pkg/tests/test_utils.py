# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from core.utils import format_duration, format_rational, get_file_hash, parse_rational, parse_vector


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-3/4", Fraction(-3, 4)), (" 6 / 8 ", Fraction(3, 4)), (5, Fraction(5)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", None, True])
def test_parse_rational_invalid(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions())
def test_format_parse(value):
    assert parse_rational(format_rational(value)) == value


def test_format_integer():
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_vector(["1/2", "0"]) == [Fraction(1, 2), Fraction(0)]


def test_file_hash(tmp_path):
    path = tmp_path / "data.txt"
    path.write_bytes(b"abc")
    assert get_file_hash(str(path)) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    with pytest.raises(FileNotFoundError):
        get_file_hash(str(tmp_path / "missing"))


def test_format_duration():
    assert format_duration(0.25) == "250 ms"
    assert format_duration(2.5) == "2.50 s"
    assert format_duration(125) == "2 min 5.0 s"
