import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from sp4osc.report import Check, VerificationReport
from sp4osc.serialize import format_float, format_scalar, matrix_from_json, matrix_to_json, to_csv


def test_check_pass_is_strict():
    assert Check("x", 0.5, 1.0).passed
    assert not Check("x", 1.0, 1.0).passed


def test_report_counts_and_dict():
    rep = VerificationReport("demo")
    rep.add("ok", 1e-15, 1e-12)
    rep.add("bad", 1.0, 1e-12)
    d = rep.to_dict()
    assert (d["passed"], d["failed"]) == (1, 1)
    assert d["checks"][1] == {"label": "bad", "residual": 1.0, "tolerance": 1e-12, "pass": False}
    assert not rep.ok
    assert [c.label for c in rep.failures()] == ["bad"]
    assert "FAIL  bad" in rep.format()


def test_extend_prefixes():
    a, b = VerificationReport("a"), VerificationReport("b")
    b.add("x", 0.0, 1.0)
    a.extend(b, "b: ")
    assert a.checks[0].label == "b: x"


complex_entries = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=50)
@given(st.integers(1, 5).flatmap(lambda d: arrays(complex, (d, d), elements=complex_entries)))
def test_matrix_json_round_trip(m):
    obj = json.loads(json.dumps(matrix_to_json(m)))
    assert np.array_equal(matrix_from_json(obj), m)


def test_matrix_json_rejects_bad_size():
    with pytest.raises(ValueError):
        matrix_from_json({"dim": 2, "entries": [[0, 0]] * 3})


@pytest.mark.parametrize(
    "z,text",
    [(0.5, "1/2"), (-0.25j, "-1/4i"), (0.5 + 0.5j, "1/2+1/2i"), (1j, "1i"), (0, "0"), (2 ** 0.5, "1.4142135623730951")],
)
def test_format_scalar(z, text):
    assert format_scalar(z) == text


def test_csv_and_floats():
    assert to_csv(("a", "b"), [(1, 2)]) == "a,b\n1,2\n"
    assert format_float(-0.0) == "0.0"
    assert format_float(0.5) == "0.5"
