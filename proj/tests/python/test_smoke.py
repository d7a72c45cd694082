import json

import numpy as np
import pytest

import _fqg as fqg


def test_builtin_names():
    names = fqg.builtin_names()
    assert len(names) == 10
    assert "kp8" in names


def test_haar_state_uniform_on_function_algebra():
    qg = fqg.builtin("fun:Z4")
    assert qg.n == 4
    np.testing.assert_allclose(qg.haar, np.full(4, 0.25 + 0j), atol=1e-12)


def test_kp8_is_genuinely_quantum():
    qg = fqg.builtin("kp8")
    assert not qg.is_commutative()
    assert not qg.is_cocommutative()


def test_convolution_idempotent():
    qg = fqg.builtin("grp:S3")
    h = fqg.haar_state(qg)
    assert fqg.is_idempotent_state(h)
    eps = fqg.counit_functional(qg)
    assert fqg.order_le(eps, h)
    assert not fqg.order_le(h, eps)


def test_search_matches_oracle():
    states = fqg.search_idempotents(fqg.builtin("fun:S3"))
    assert len(states) == 6
    for st in states:
        assert fqg.is_idempotent_state(st.phi)


def test_lattice_json_roundtrip():
    doc = json.loads(fqg.lattice_json(fqg.builtin("fun:Z2")))
    assert doc["model"] == "fun:Z2"
    assert len(doc["elements"]) == 2
    assert doc["hasse_edges"] == [[0, 1]]


def test_serialization_roundtrip():
    qg = fqg.builtin("fun:Z2")
    text = fqg.write(qg)
    again = fqg.parse(text)
    assert fqg.write(again) == text


def test_schema_error():
    with pytest.raises(fqg.SchemaError):
        fqg.parse("{}")
