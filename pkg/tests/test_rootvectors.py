"""Tests for root vectors, divided powers, and label evaluation."""

import pytest

from schuralg.errors import NotDivisible
from schuralg.ring import LaurentFraction
from schuralg.rootvectors import (
    BasisLabel,
    divided_power,
    eval_label,
    label_from_json,
    label_key,
    label_to_json,
    root_vector,
)
from schuralg.tensormodel import build_model, generator_action, weight_idempotent


def test_simple_root_vectors_are_generators():
    m = build_model(3, 2)
    assert root_vector(m, (1, 2), "plus") == generator_action(m, "e", 1)
    assert root_vector(m, (2, 3), "minus") == generator_action(m, "f", 2)
    q = build_model(3, 2, mode="quantum")
    assert root_vector(q, (1, 2), "plus") == generator_action(q, "E", 1)
    assert root_vector(q, (2, 3), "minus") == generator_action(q, "F", 2)


def test_classical_long_root_vector_action():
    m = build_model(3, 1)
    x = root_vector(m, (1, 3), "plus")
    j = m.word_index[(3,)]
    assert x.cols == {j: {m.word_index[(1,)]: 1}}
    y = root_vector(m, (1, 3), "minus")
    assert y.cols == {m.word_index[(1,)]: {j: 1}}


def test_classical_long_root_equals_commutator():
    """Leibniz action of E_13 agrees with the commutator oracle [e1, e2]."""
    m = build_model(3, 2)
    e1 = generator_action(m, "e", 1)
    e2 = generator_action(m, "e", 2)
    assert root_vector(m, (1, 3), "plus") == (e1 @ e2) - (e2 @ e1)
    f1 = generator_action(m, "f", 1)
    f2 = generator_action(m, "f", 2)
    assert root_vector(m, (1, 3), "minus") == (f2 @ f1) - (f1 @ f2)


def test_quantum_long_root_recursion():
    m = build_model(3, 2, mode="quantum")
    e12 = root_vector(m, (1, 2), "plus")
    e23 = root_vector(m, (2, 3), "plus")
    v = m.scalars.v_power
    expected = (e12 @ e23) - (e23 @ e12).scale(v(-1))
    assert root_vector(m, (1, 3), "plus") == expected
    f12 = root_vector(m, (1, 2), "minus")
    f23 = root_vector(m, (2, 3), "minus")
    expected = (f23 @ f12) - (f12 @ f23).scale(v(1))
    assert root_vector(m, (1, 3), "minus") == expected


def test_root_vector_validation():
    m = build_model(2, 2)
    with pytest.raises(ValueError):
        root_vector(m, (2, 1), "plus")
    with pytest.raises(ValueError):
        root_vector(m, (1, 2), "raise")


def test_divided_power_basics():
    m = build_model(2, 2)
    e = root_vector(m, (1, 2), "plus")
    assert divided_power(m, e, 0) == m.identity()
    assert divided_power(m, e, 1) == e
    sq = divided_power(m, e, 2)
    assert sq.cols == {m.word_index[(2, 2)]: {m.word_index[(1, 1)]: 1}}
    assert divided_power(m, e, 3).is_zero()


def test_divided_power_not_divisible():
    m = build_model(2, 2)
    with pytest.raises(NotDivisible):
        divided_power(m, m.identity(), 2)  # id^2 / 2 has entries 1/2


def test_quantum_divided_powers_are_integral():
    """Divided powers of every root vector stay in Z[v, v^-1]."""
    m = build_model(3, 2, mode="quantum")
    for root in m.root_data.positive_roots:
        for sign in ("plus", "minus"):
            x = root_vector(m, root, sign)
            for k in (1, 2):
                dp = divided_power(m, x, k)
                for col in dp.cols.values():
                    for s in col.values():
                        assert s.den.is_one()


def test_nilpotency_index():
    for n, d in [(2, 2), (3, 2), (2, 3)]:
        for mode in ("classical", "quantum"):
            m = build_model(n, d, mode=mode)
            for root in m.root_data.positive_roots:
                for sign in ("plus", "minus"):
                    x = root_vector(m, root, sign)
                    assert not (x**d).is_zero(), (n, d, mode, root, sign)
                    assert (x ** (d + 1)).is_zero(), (n, d, mode, root, sign)


def test_eval_label_zero_flavor():
    m = build_model(2, 2)
    label = BasisLabel(flavor="ZERO", A=(0,), lam=(1, 1), C=(0,))
    assert eval_label(m, label) == weight_idempotent(m, (1, 1))


def test_eval_label_b1_matches_direct_product():
    m = build_model(2, 2)
    label = BasisLabel(flavor="B1", A=(1,), lam=(0, 2), C=(1,))
    e = root_vector(m, (1, 2), "plus")
    f = root_vector(m, (1, 2), "minus")
    expected = e @ weight_idempotent(m, (0, 2)) @ f
    assert eval_label(m, label) == expected
    assert not expected.is_zero()


def test_eval_label_b2_order():
    m = build_model(2, 2)
    label = BasisLabel(flavor="B2", A=(1,), lam=(1, 1), C=(1,))
    e = root_vector(m, (1, 2), "plus")
    f = root_vector(m, (1, 2), "minus")
    assert eval_label(m, label) == f @ weight_idempotent(m, (1, 1)) @ e


def test_eval_label_pbw_composition_order():
    m = build_model(2, 2)
    # k0 = 2: generator order is (minus, H_1, plus); the monomial with
    # H-exponent 1 and plus-exponent 1 is the product H_1 . e, composed
    # with e applied first.
    label = BasisLabel(flavor="PBW", pbw=(0, 1, 1), k0=2)
    h1 = generator_action(m, "H", 1)
    e = root_vector(m, (1, 2), "plus")
    assert eval_label(m, label) == h1 @ e


def test_eval_label_kostant_order_is_lexicographic():
    m = build_model(3, 2)
    # A has both (1,2) and (1,3); lexicographic order puts (1,2) first.
    label = BasisLabel(flavor="PLUS", A=(1, 1, 0), lam=None, C=(0, 0, 0))
    x12 = root_vector(m, (1, 2), "plus")
    x13 = root_vector(m, (1, 3), "plus")
    assert eval_label(m, label) == x12 @ x13


def test_eval_label_quantum_specialization_consistency():
    mq = build_model(2, 2, mode="quantum")
    mc = build_model(2, 2)
    label = BasisLabel(flavor="B1", A=(1,), lam=(0, 2), C=(1,))
    q_op = eval_label(mq, label)
    c_op = eval_label(mc, label)
    assert set(q_op.cols) == set(c_op.cols)
    for j, col in q_op.cols.items():
        assert {i: s.specialize(1) for i, s in col.items()} == {
            i: s for i, s in c_op.cols[j].items()
        }


def test_label_json_roundtrip():
    m = build_model(3, 2)
    rd = m.root_data
    labels = [
        BasisLabel(flavor="B1", A=(1, 0, 1), lam=(0, 1, 1), C=(0, 0, 0)),
        BasisLabel(flavor="ZERO", A=(0, 0, 0), lam=(2, 0, 0), C=(0, 0, 0)),
        BasisLabel(flavor="PBW", pbw=(0, 1, 0, 0, 0, 2, 0, 0), k0=3),
        BasisLabel(flavor="PLUS", A=(0, 2, 0), lam=None, C=(0, 0, 0)),
    ]
    for label in labels:
        data = label_to_json(label, rd)
        back = label_from_json(data, rd)
        assert back == label, label


def test_label_json_shape():
    m = build_model(2, 2)
    label = BasisLabel(flavor="B1", A=(1,), lam=(1, 1), C=(0,))
    assert label_to_json(label, m.root_data) == {
        "flavor": "B1",
        "A": {"1-2": 1},
        "C": {},
        "lambda": [1, 1],
    }


def test_label_key_format():
    m = build_model(2, 2)
    rd = m.root_data
    assert label_key(BasisLabel(flavor="B1", A=(1,), lam=(0, 2), C=(1,)), rd) == (
        "e{1-2:1} 1(0,2) f{1-2:1}"
    )
    assert label_key(BasisLabel(flavor="ZERO", A=(0,), lam=(2, 0), C=(0,)), rd) == "1(2,0)"
    assert label_key(BasisLabel(flavor="PBW", pbw=(1, 0, 2), k0=2), rd) == "pbw[k0=2;1,0,2]"
