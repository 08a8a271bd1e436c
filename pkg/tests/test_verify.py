"""Checks of the verification layer itself.

The report plumbing is exercised directly, and several identities that
the checkers assert are recomputed here independently (diagonal
eigenvalue bookkeeping, hand-expanded reduction instances) so a
regression in the checkers cannot hide behind their own pass flags.
"""

import pytest

from schuralg.errors import HypothesisError
from schuralg.ring import LaurentPoly, quantum_integer
from schuralg.tensormodel import (
    build_model,
    cartan_binomial,
    generator_action,
    weight_idempotent,
)
from schuralg.rootvectors import root_divided_power
from schuralg.verify import (
    CheckReport,
    check_enveloping_relations,
    check_idempotent_presentation,
    check_rank_one_presentation,
    check_reduction_formulas,
    check_schur_relations,
    check_specialization,
    check_structural_facts,
    suite_reports,
)
from schuralg.verify import _Agg


def _ids(report):
    return [item.id for item in report.items]


def test_report_plumbing():
    rep = CheckReport("demo", 2, 2, "classical")
    rep.add("a", True)
    rep.add("b", True, vacuous=True, detail="empty range")
    assert rep.passed
    rep.add("c", False, detail="broken")
    assert not rep.passed
    assert [it.id for it in rep.failures()] == ["c"]
    data = rep.to_json()
    assert data["pass"] is False
    assert "seconds" not in data  # timing never enters the serialized form
    assert data["items"][1]["vacuous"] is True
    text = rep.render_text()
    assert "FAIL" in text and "demo" in text


def test_vacuous_aggregation():
    agg = _Agg()
    item = agg.item("nothing", "no cases")
    assert item.ok and item.vacuous and item.detail == "no cases"
    agg.check(True, "x")
    item = agg.item("one")
    assert item.ok and not item.vacuous


def test_enveloping_relations_classical_2_2():
    rep = check_enveloping_relations(build_model(2, 2))
    assert rep.passed
    assert _ids(rep) == ["R1", "R2", "R3", "R4", "R5"]
    by_id = {item.id: item for item in rep.items}
    assert by_id["R4"].vacuous and by_id["R5"].vacuous  # no pairs for n = 2
    assert not by_id["R2"].vacuous


def test_enveloping_relations_rank_three_includes_braid():
    rep = check_enveloping_relations(build_model(3, 2))
    assert rep.passed
    by_id = {item.id: item for item in rep.items}
    assert not by_id["R4"].vacuous and not by_id["R5"].vacuous
    qrep = check_enveloping_relations(build_model(3, 2, mode="quantum"))
    assert qrep.passed
    assert _ids(qrep) == ["Q1", "Q2", "Q3", "Q4", "Q5"]
    assert not {item.id: item for item in qrep.items}["Q4"].vacuous


def test_schur_relations_and_direct_diagonals():
    m = build_model(2, 2)
    rep = check_schur_relations(m)
    assert rep.passed and _ids(rep) == ["R6", "R7"]
    # Independent recomputation: H_1 + H_2 = 2 and the cubic kills H_1.
    h1 = generator_action(m, "H", 1)
    h2 = generator_action(m, "H", 2)
    assert h1 + h2 == m.identity().scale(2)
    ident = m.identity()
    cubic = h1 @ (h1 - ident) @ (h1 - ident.scale(2))
    assert cubic.is_zero()

    q = build_model(2, 2, mode="quantum")
    qrep = check_schur_relations(q)
    assert qrep.passed and _ids(qrep) == ["Q6", "Q7"]
    k1 = generator_action(q, "K", 1)
    qid = q.identity()
    vp = q.scalars.v_power
    poly = (k1 - qid) @ (k1 - qid.scale(vp(1))) @ (k1 - qid.scale(vp(2)))
    assert poly.is_zero()


@pytest.mark.parametrize("mode", ["classical", "quantum"])
def test_idempotent_presentation_passes(mode):
    rep = check_idempotent_presentation(build_model(2, 2, mode=mode))
    assert rep.passed
    suffix = "'" if mode == "quantum" else ""
    assert _ids(rep) == [f"S1{suffix}", f"S2{suffix}", f"S3{suffix}"]


def test_idempotent_shift_rules_directly():
    m = build_model(2, 2)
    e1 = generator_action(m, "e", 1)
    one_02 = weight_idempotent(m, (0, 2))
    one_11 = weight_idempotent(m, (1, 1))
    one_20 = weight_idempotent(m, (2, 0))
    assert e1 @ one_02 == one_11 @ e1
    assert (e1 @ one_20).is_zero()  # shifted weight (3, -1) is invalid
    # Commutator eigenvalues 2, 0, -2 on the three weight spaces.
    f1 = generator_action(m, "f", 1)
    comm = e1 @ f1 - f1 @ e1
    expected = one_20.scale(2) + one_02.scale(-2)
    assert comm == expected


def test_idempotent_commutator_quantum_uses_signed_brackets():
    q = build_model(2, 3, mode="quantum")
    E = generator_action(q, "E", 1)
    F = generator_action(q, "F", 1)
    comm = E @ F - F @ E
    expected = q.zero_op()
    for lam in q.weight_set():
        coeff = quantum_integer(lam[0] - lam[1])  # negative arguments occur
        expected = expected + weight_idempotent(q, lam).scale(coeff)
    assert comm == expected


def test_reduction_classical_worked_instance():
    # alpha = (1,2), a = b = c = 1, s = 1 at (n,d) = (2,2): the reduced
    # expansion has the single term k = 1 with coefficient C(0,0)*C(2,1).
    m = build_model(2, 2)
    f1 = root_divided_power(m, (1, 2), "minus", 1)
    e1 = root_divided_power(m, (1, 2), "plus", 1)
    lhs = f1 @ cartan_binomial(m, 2, 1) @ e1
    rhs = cartan_binomial(m, 2, 2).scale(2)
    assert lhs == rhs


def test_reduction_quantum_worked_instance():
    # a = c = 1, b1 = 1, s = 1 at (n,d) = (2,2): E 1_{(1,1)} F = [2] 1_{(2,0)}.
    q = build_model(2, 2, mode="quantum")
    E = root_divided_power(q, (1, 2), "plus", 1)
    F = root_divided_power(q, (1, 2), "minus", 1)
    lhs = E @ weight_idempotent(q, (1, 1)) @ F
    rhs = weight_idempotent(q, (2, 0)).scale(LaurentPoly({1: 1, -1: 1}))
    assert lhs == rhs


@pytest.mark.parametrize(
    "n,d,family,mode",
    [
        (2, 2, "classical-H", "classical"),
        (2, 3, "classical-H", "classical"),
        (3, 2, "classical-H", "classical"),
        (2, 2, "classical-idempotent", "classical"),
        (3, 2, "classical-idempotent", "classical"),
        (2, 2, "quantum-idempotent", "quantum"),
        (3, 2, "quantum-idempotent", "quantum"),
    ],
)
def test_reduction_families_pass(n, d, family, mode):
    m = build_model(n, d, mode=mode)
    rep = check_reduction_formulas(m, family)
    assert rep.passed
    assert not any(item.vacuous for item in rep.items)
    assert len(rep.items) == 2 * len(m.root_data.positive_roots)


def test_reduction_family_mode_guard():
    m = build_model(2, 2)
    with pytest.raises(ValueError):
        check_reduction_formulas(m, "quantum-idempotent")
    with pytest.raises(ValueError):
        check_reduction_formulas(m, "no-such-family")


@pytest.mark.parametrize("d", [1, 2, 3])
def test_rank_one_presentation(d):
    rep = check_rank_one_presentation(d)
    assert rep.passed
    by_id = {item.id: item for item in rep.items}
    assert f"degree {d + 1}" == by_id["classical:minimal-polynomial"].detail
    assert "quantum:minimal-polynomial" in by_id
    assert "rank" in by_id["classical:truncated-monomials"].detail


@pytest.mark.parametrize("mode", ["classical", "quantum"])
def test_structural_facts(mode):
    m = build_model(2, 2, mode=mode)
    rep = check_structural_facts(m)
    assert rep.passed
    tri = [item for item in rep.items if item.id.startswith("triangular[")]
    assert len(tri) == 6


def test_structural_direct_oracles():
    m = build_model(2, 2)
    e = generator_action(m, "e", 1)
    assert (e @ e @ e).is_zero()
    assert not (e @ e).is_zero()
    # Product of Cartan binomials for exponents (2, 1) dies in degree 2.
    op = cartan_binomial(m, 1, 2) @ cartan_binomial(m, 2, 1)
    assert op.is_zero()


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3)])
def test_specialization(n, d):
    rep = check_specialization(n, d)
    assert rep.passed
    assert _ids(rep) == ["B1[v=1]", "B2[v=1]"]
    assert rep.notes  # the excluded family is called out


def test_suite_reports_selection():
    reports = suite_reports(2, 2, mode="classical", suite="relations")
    assert [r.name for r in reports] == ["enveloping-relations", "schur-relations"]
    reports = suite_reports(3, 2, mode="quantum", suite="reduction")
    assert [r.name for r in reports] == ["reduction[quantum-idempotent]"]
    reports = suite_reports(2, 2, mode="classical", suite="all")
    assert any(r.name == "rank-one-presentation" for r in reports)
    reports = suite_reports(3, 2, mode="classical", suite="all")
    assert not any(r.name == "rank-one-presentation" for r in reports)
    with pytest.raises(HypothesisError):
        suite_reports(3, 2, mode="classical", suite="rank1")
    with pytest.raises(ValueError):
        suite_reports(2, 2, suite="bogus")
