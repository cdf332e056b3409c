import copy
import json
import os

import pytest

from gkmflag.model import H, K, flag_space
from gkmflag.quantum import (
    QH,
    QK,
    FormalQElem,
    QuantumClass,
    TableValidationError,
    MissingProductError,
    formal_leibniz_eval,
    generator_facts,
    load_fixture_table,
    load_table,
    q_multiply,
    quantum_degrees,
    quantum_delta,
    quantum_demazure_dual,
    verify_quantum_examples,
    verify_quantum_relations,
    verify_table,
    weyl_left_q,
)
from gkmflag.scalars import CohScalar, KScalar, ScalarFraction


FIXDIR = os.path.join(os.path.dirname(__file__), "..", "src", "gkmflag", "fixtures")


def fixture_doc(name):
    with open(os.path.join(FIXDIR, name)) as f:
        return json.load(f)


@pytest.fixture(scope="module")
def gr24():
    return flag_space("A3", (1, 3))


@pytest.fixture(scope="module")
def qh_table():
    return load_table(fixture_doc("gr24_qh_partial.json"))


@pytest.fixture(scope="module")
def qk_table():
    return load_table(fixture_doc("gr24_qk_partial.json"))


def test_quantum_degrees(gr24):
    qnodes, degs = quantum_degrees(gr24)
    assert qnodes == (2,)
    assert degs == {2: 4}


def test_load_table_validates(qh_table, qk_table):
    assert len(qh_table.entries) == 2
    assert len(qk_table.entries) == 2


def test_empty_table_with_unit_rows_valid(gr24):
    doc = {
        "space": {"type": "A", "rank": 3, "parabolic": [1, 3]},
        "theory": "QH",
        "qdeg_arity": 1,
        "entries": [
            {
                "u": "e",
                "v": "2",
                "terms": [
                    {
                        "w": "2",
                        "qdeg": [0],
                        "coeff": {
                            "num": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
                            "den": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
                        },
                    }
                ],
            }
        ],
    }
    table = load_table(doc)
    assert len(table.entries) == 1


def test_bad_unit_row_rejected():
    doc = {
        "space": {"type": "A", "rank": 3, "parabolic": [1, 3]},
        "theory": "QH",
        "qdeg_arity": 1,
        "entries": [
            {
                "u": "e",
                "v": "2",
                "terms": [
                    {
                        "w": "1-2",
                        "qdeg": [0],
                        "coeff": {
                            "num": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
                            "den": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
                        },
                    }
                ],
            }
        ],
    }
    with pytest.raises(TableValidationError):
        load_table(doc)


def test_classical_limit_violation_rejected():
    doc = fixture_doc("gr24_qh_partial.json")
    doc = copy.deepcopy(doc)
    # tamper with one classical coefficient
    doc["entries"][0]["terms"][0]["coeff"]["num"][0]["coeff"] = "7"
    with pytest.raises(TableValidationError):
        load_table(doc)


def test_grading_violation_rejected():
    doc = copy.deepcopy(fixture_doc("gr24_qh_partial.json"))
    # a q-term of impossible degree on sigma1 * sigma11
    ent = [e for e in doc["entries"] if {e["u"], e["v"]} == {"2", "1-2"}][0]
    ent["terms"].append(
        {
            "w": "e",
            "qdeg": [1],
            "coeff": {
                "num": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
                "den": [{"exponents": [0, 0, 0, 0], "coeff": "1"}],
            },
        }
    )
    with pytest.raises(TableValidationError):
        load_table(doc)


def test_q_multiply_unit_and_point_class(gr24, qh_table):
    rs = gr24.rs
    s2 = rs.from_word((2,))
    s12 = rs.from_word((1, 2))
    point = rs.from_word((2, 1, 3, 2))
    one_cls = QuantumClass.basis_element(gr24, QH, rs.identity, arity=1)
    b1 = QuantumClass.basis_element(gr24, QH, s2, arity=1)
    b11 = QuantumClass.basis_element(gr24, QH, s12, arity=1)
    assert q_multiply(qh_table, one_cls, b11) == b11
    # the printed point-class combination
    a1 = CohScalar.linear_form((1, 0, 0))
    combo = q_multiply(qh_table, b11, b11) - q_multiply(qh_table, b1, b11).scale(a1)
    assert combo == QuantumClass.basis_element(gr24, QH, point, arity=1)
    # commutativity through the canonical key
    assert q_multiply(qh_table, b1, b11) == q_multiply(qh_table, b11, b1)
    # distributivity over a scalar combination
    lin = b1.scale(CohScalar.linear_form((0, 1, 0))) + b11
    lhs = q_multiply(qh_table, lin, b11)
    rhs = q_multiply(qh_table, b1, b11).scale(CohScalar.linear_form((0, 1, 0))) + q_multiply(
        qh_table, b11, b11
    )
    assert lhs == rhs
    with pytest.raises(MissingProductError):
        q_multiply(qh_table, b1, b1)


def test_weyl_left_q(gr24, qh_table):
    rs = gr24.rs
    s2 = rs.from_word((2,))
    s12 = rs.from_word((1, 2))
    b1 = QuantumClass.basis_element(gr24, QH, s2, arity=1)
    b11 = QuantumClass.basis_element(gr24, QH, s12, arity=1)
    w = rs.simple(2)
    assert weyl_left_q(rs.identity, b1) == b1
    # automorphism against the fixture products where available
    lhs = weyl_left_q(w, q_multiply(qh_table, b1, b11))
    rhs = q_multiply(qh_table, weyl_left_q(w, b1), weyl_left_q(w, b11))
    assert lhs == rhs
    lhs = weyl_left_q(w, q_multiply(qh_table, b11, b11))
    rhs = q_multiply(qh_table, weyl_left_q(w, b11), weyl_left_q(w, b11))
    assert lhs == rhs


def test_quantum_delta_examples(gr24):
    rs = gr24.rs
    s2 = rs.from_word((2,))
    s12 = rs.from_word((1, 2))
    b1 = QuantumClass.basis_element(gr24, QH, s2, arity=1)
    b11 = QuantumClass.basis_element(gr24, QH, s12, arity=1)
    one_cls = QuantumClass.basis_element(gr24, QH, rs.identity, arity=1)
    assert quantum_delta(2, b1) == one_cls
    assert quantum_delta(1, b11) == b1
    zero = QuantumClass(gr24, QH, {})
    assert quantum_delta(1, b1) == zero
    assert quantum_delta(3, b1) == zero
    assert quantum_delta(2, b11) == zero
    assert quantum_delta(3, b11) == zero
    # q-linearity: delta of q^d * 1 vanishes
    qone = QuantumClass.basis_element(gr24, QH, rs.identity, qdeg=(3,))
    for i in (1, 2, 3):
        assert quantum_delta(i, qone) == zero
    with pytest.raises(ValueError):
        quantum_delta(1, QuantumClass.basis_element(gr24, QK, s2, arity=1))


def test_quantum_demazure_dual_examples(gr24):
    rs = gr24.rs
    s2 = rs.from_word((2,))
    s12 = rs.from_word((1, 2))
    point = rs.from_word((2, 1, 3, 2))
    mid = rs.from_word((1, 3, 2))
    b1 = QuantumClass.basis_element(gr24, QK, s2, arity=1)
    b11 = QuantumClass.basis_element(gr24, QK, s12, arity=1)
    one_cls = QuantumClass.basis_element(gr24, QK, rs.identity, arity=1)
    assert quantum_demazure_dual(2, b1) == one_cls
    assert quantum_demazure_dual(2, b11) == b11
    assert quantum_demazure_dual(2, QuantumClass.basis_element(gr24, QK, point, arity=1)) == (
        QuantumClass.basis_element(gr24, QK, mid, arity=1)
    )
    assert quantum_demazure_dual(1, one_cls) == one_cls


def test_formal_engine_reproduces_paper_examples():
    rep = verify_quantum_examples()
    assert rep.ok, rep.failures()


def test_formal_engine_pieces(gr24):
    rs = gr24.rs
    gens = {"sig1": rs.from_word((2,)), "sig11": rs.from_word((1, 2))}
    facts = generator_facts(gr24, QH, 2, gens)
    rank = 3
    g = lambda n: FormalQElem.generator(rank, H, n)
    a1 = ScalarFraction.from_scalar(CohScalar.linear_form((1, 0, 0)))
    a12 = ScalarFraction.from_scalar(CohScalar.linear_form((1, 1, 0)))
    x = g("sig11") * g("sig11") - (g("sig1") * g("sig11")).scale(a1)
    out = formal_leibniz_eval(facts, x)
    assert out == g("sig1") * g("sig11") - g("sig11").scale(a12)
    # missing generator fact raises
    broken = FormalQElem.generator(rank, H, "mystery")
    with pytest.raises(KeyError):
        formal_leibniz_eval(facts, broken)


def test_generator_facts_leave_span():
    space = flag_space("A2")
    gens = {"g": space.rs.from_word((1, 2))}
    with pytest.raises(ValueError):
        generator_facts(space, QH, 1, gens)  # delta_1 g = [X^{s2}] is no generator


def test_quantum_operators_restrict_to_classical(gr24):
    # the q-degree-zero part of every quantum operator is its classical
    # counterpart, exhaustively over the basis
    from gkmflag.model import expand_schubert
    from gkmflag.operators import bgg_left, demazure_left, weyl_left

    for w in gr24.points:
        for i in (1, 2, 3):
            bh = QuantumClass.basis_element(gr24, QH, w, arity=1)
            cls = gr24.schubert_basis(H, "Bminus")[w]
            classical = expand_schubert(bgg_left(i, cls), side="Bminus").nonzero()
            got = quantum_delta(i, bh).terms.get((0,), {})
            assert got == classical
            sw = expand_schubert(weyl_left(gr24.rs.simple(i), cls), side="Bminus").nonzero()
            assert weyl_left_q(gr24.rs.simple(i), bh).terms.get((0,), {}) == sw
            bk = QuantumClass.basis_element(gr24, QK, w, arity=1)
            kcls = gr24.schubert_basis(K, "Bminus")[w]
            kclassical = expand_schubert(
                demazure_left(i, kcls, dual=True), side="Bminus"
            ).nonzero()
            assert quantum_demazure_dual(i, bk).terms.get((0,), {}) == kclassical


def test_table_leibniz_and_relations(qh_table, qk_table):
    for table in (qh_table, qk_table):
        rep = verify_table(table)
        assert rep.ok, rep.failures()
        rep = verify_quantum_relations(table)
        assert rep.ok, rep.failures()


def test_fixture_loader_env_override(tmp_path, monkeypatch):
    src = os.path.join(FIXDIR, "gr24_qh_partial.json")
    with open(src) as f:
        content = f.read()
    alt = tmp_path / "gr24_qh_partial.json"
    alt.write_text(content)
    monkeypatch.setenv("GKMFLAG_FIXTURES", str(tmp_path))
    table = load_fixture_table("gr24_qh_partial.json")
    assert len(table.entries) == 2
