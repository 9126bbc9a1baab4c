"""Deterministic serialization: float formatting, key ordering, round-trips."""

import json
import math

import numpy as np
import pytest

from ordgroups import InputError, dumps, law_from_descriptor, order_from_descriptor
from ordgroups.jsonio import action_from_descriptor


def test_floats_round_trip_through_seventeen_digits():
    values = [math.e, math.pi, 1.0 / 3.0, 7.5, -0.1, 1e-300, 2.0**52 + 0.5]
    for v in values:
        assert json.loads(dumps({"v": v}))["v"] == v


def test_integral_floats_keep_a_decimal_point():
    assert dumps([5.0, 7.0, 7.5]) == "[5.0,7.0,7.5]"


def test_keys_are_sorted_and_output_is_stable():
    a = dumps({"b": 1, "a": 2.5, "c": [1, 2.0]})
    b = dumps({"c": [1, 2.0], "a": 2.5, "b": 1})
    assert a == b == '{"a":2.5,"b":1,"c":[1,2.0]}'


def test_numpy_scalars_and_arrays_serialize():
    out = dumps({"x": np.float64(0.5), "y": np.array([1.0, 2.0]), "n": np.int64(3)})
    assert json.loads(out) == {"x": 0.5, "y": [1.0, 2.0], "n": 3}


def test_nonfinite_values_become_strings():
    assert json.loads(dumps([float("inf"), float("-inf")])) == ["inf", "-inf"]
    assert json.loads(dumps(float("nan"))) == "nan"


def test_order_descriptor_forms():
    assert order_from_descriptor({"significance": [1, 0]}).significance == (1, 0)
    assert order_from_descriptor([2, 0, 1]).significance == (2, 0, 1)
    with pytest.raises(InputError):
        order_from_descriptor({})


def test_action_descriptor():
    a = action_from_descriptor({"kind": "character", "coeffs": [1, 0]})
    assert a.coeffs == (1.0, 0.0)
    with pytest.raises(InputError):
        action_from_descriptor({"coeffs": [1]})


def test_law_descriptor_requires_family():
    with pytest.raises(InputError):
        law_from_descriptor({"params": {}})
    with pytest.raises(InputError):
        law_from_descriptor({"family": "g_cd", "params": {"c": 1.0}})  # missing d
