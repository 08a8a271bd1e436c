"""Tests for the tensor model: word enumeration, generator actions,
weight idempotents."""

import pytest

from schuralg.errors import BadWeight, SizeLimit
from schuralg.ring import LaurentFraction
from schuralg.tensormodel import (
    build_model,
    cartan_binomial,
    compositions,
    generator_action,
    weight_idempotent,
    word_weight,
)


def op_as_dict(model, op):
    """Readable form {column word: {row word: scalar}} for assertions."""
    return {
        model.words[j]: {model.words[i]: s for i, s in col.items()}
        for j, col in op.cols.items()
    }


def weight_projector(model, lam):
    """Direct 0/1 projector onto words of weight lam (test oracle)."""
    lam = tuple(lam)
    one = model.scalars.one
    return model.diagonal(lambda j: one if model.weights[j] == lam else 0)


def test_word_enumeration_is_lexicographic():
    m = build_model(2, 2)
    assert m.words == ((1, 1), (1, 2), (2, 1), (2, 2))
    m31 = build_model(3, 1)
    assert m31.words == ((1,), (2,), (3,))
    assert word_weight((1, 2, 1), 3) == (2, 1, 0)


def test_compositions_order_and_count():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions(3, 3)) == 10
    assert all(sum(lam) == 4 for lam in compositions(3, 4))


def test_size_limit():
    with pytest.raises(SizeLimit):
        build_model(10, 5, word_cap=10_000)
    # 10^4 itself is allowed (cap is inclusive).
    build_model(10, 4, word_cap=10_000)


def test_classical_e1_leibniz_action():
    m = build_model(2, 2)
    e1 = generator_action(m, "e", 1)
    d = op_as_dict(m, e1)
    assert d == {
        (1, 2): {(1, 1): 1},
        (2, 1): {(1, 1): 1},
        (2, 2): {(1, 2): 1, (2, 1): 1},
    }


def test_classical_cartan_diagonal():
    m = build_model(2, 3)
    h1 = generator_action(m, "H", 1)
    j = m.word_index[(1, 2, 1)]
    assert h1.cols[j] == {j: 2}
    idx = m.word_index[(2, 2, 2)]
    assert idx not in h1.cols  # eigenvalue 0 is not stored


def test_quantum_k1_diagonal():
    m = build_model(2, 2, mode="quantum")
    k1 = generator_action(m, "K", 1)
    expected = {
        (1, 1): LaurentFraction.v_power(2),
        (1, 2): LaurentFraction.v_power(1),
        (2, 1): LaurentFraction.v_power(1),
        (2, 2): LaurentFraction.one(),
    }
    for w, s in expected.items():
        j = m.word_index[w]
        assert k1.cols[j] == {j: s}


def test_quantum_e1_coproduct_action():
    m = build_model(2, 2, mode="quantum")
    e1 = generator_action(m, "E", 1)
    d = op_as_dict(m, e1)
    v = LaurentFraction.v_power
    assert d == {
        (1, 2): {(1, 1): v(0)},
        (2, 1): {(1, 1): v(1)},
        (2, 2): {(1, 2): v(-1), (2, 1): v(0)},
    }


def test_quantum_f1_coproduct_action():
    m = build_model(2, 2, mode="quantum")
    f1 = generator_action(m, "F", 1)
    d = op_as_dict(m, f1)
    v = LaurentFraction.v_power
    assert d == {
        (1, 1): {(2, 1): v(0), (1, 2): v(-1)},
        (1, 2): {(2, 2): v(0)},
        (2, 1): {(2, 2): v(1)},
    }


def test_k_inverse_is_inverse():
    m = build_model(3, 2, mode="quantum")
    for k in range(1, 4):
        kk = generator_action(m, "K", k)
        kinv = generator_action(m, "K^-1", k)
        assert kk @ kinv == m.identity()
        assert kinv @ kk == m.identity()


def test_raising_shifts_weight_by_simple_root():
    m = build_model(3, 2)
    for i in (1, 2):
        alpha = m.root_data.simple_root(i)
        op = generator_action(m, "e", i)
        for j, col in op.cols.items():
            mu = m.weights[j]
            for row in col:
                assert m.weights[row] == tuple(a + b for a, b in zip(mu, alpha))


@pytest.mark.parametrize("mode", ["classical", "quantum"])
def test_weight_idempotent_equals_projector(mode):
    for n, d in [(2, 2), (2, 3), (3, 2)]:
        m = build_model(n, d, mode=mode)
        for lam in m.weight_set():
            assert weight_idempotent(m, lam) == weight_projector(m, lam), (n, d, lam)


@pytest.mark.parametrize("mode", ["classical", "quantum"])
def test_weight_idempotents_resolve_identity(mode):
    m = build_model(3, 2, mode=mode)
    total = m.zero_op()
    for lam in m.weight_set():
        total = total + weight_idempotent(m, lam)
    assert total == m.identity()


def test_weight_idempotents_orthogonal():
    m = build_model(2, 3)
    lams = m.weight_set()
    for a in lams:
        for b in lams:
            prod = weight_idempotent(m, a) @ weight_idempotent(m, b)
            if a == b:
                assert prod == weight_idempotent(m, a)
            else:
                assert prod.is_zero()


def test_weight_idempotent_rejects_bad_weights():
    m = build_model(2, 2)
    with pytest.raises(BadWeight):
        weight_idempotent(m, (1, 0))
    with pytest.raises(BadWeight):
        weight_idempotent(m, (3, -1))
    with pytest.raises(BadWeight):
        weight_idempotent(m, (1, 1, 0))


def test_cartan_binomial_values():
    m = build_model(2, 3)
    op = cartan_binomial(m, 1, 2)
    for j, w in enumerate(m.words):
        mu1 = m.weights[j][0]
        expected = mu1 * (mu1 - 1) // 2
        got = op.cols.get(j, {}).get(j, 0)
        assert got == expected


def test_cartan_binomial_quantum_values():
    from schuralg.ring import gaussian_binomial

    m = build_model(2, 3, mode="quantum")
    op = cartan_binomial(m, 2, 2)
    for j in range(m.num_words):
        mu2 = m.weights[j][1]
        expected = gaussian_binomial(mu2, 2)
        got = op.cols.get(j, {}).get(j, LaurentFraction.zero())
        assert got == expected


def test_operator_algebra_basics():
    m = build_model(2, 2)
    e1 = m.generator("e", 1)
    f1 = m.generator("f", 1)
    assert (e1 + f1) - f1 == e1
    assert e1.scale(0).is_zero()
    assert (e1 @ m.identity()) == e1
    assert (m.identity() @ e1) == e1
    assert e1**2 == e1 @ e1
    assert (e1**3).is_zero()
