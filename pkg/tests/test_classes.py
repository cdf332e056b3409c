import pytest

from gkmflag.classes import (
    cell_family,
    csm_cell,
    homogenize_csm,
    mc_cell,
    sm_cell,
    smc_cell,
    verify_class_theorems,
)
from gkmflag.model import (
    H,
    K,
    LocalizedClass,
    ambient_class,
    expand_schubert,
    fixed_point_class,
    flag_space,
    pair,
    schubert_class,
)
from gkmflag.operators import dl_left
from gkmflag.scalars import CohScalar, KScalar, ScalarFraction


def fr(s):
    return ScalarFraction.from_scalar(s)


@pytest.fixture(scope="module")
def a1():
    return flag_space("A1")


def test_csm_a1(a1):
    e, s1 = a1.points
    one = CohScalar.one(1)
    alpha = CohScalar.linear_form((1,))
    assert csm_cell(a1, s1) == LocalizedClass.from_scalars(a1, H, {e: one, s1: one + alpha})
    # the point cell class is the fixed point class
    assert csm_cell(a1, e) == fixed_point_class(a1, H, e)
    # normalization
    assert csm_cell(a1, e) + csm_cell(a1, s1) == ambient_class(a1, H)


def test_csm_expansion(a1):
    e, s1 = a1.points
    exp = expand_schubert(csm_cell(a1, s1), side="B")
    one = CohScalar.one(1)
    alpha = CohScalar.linear_form((1,))
    assert exp.coeffs[e] == fr(one)
    assert exp.coeffs[s1] == fr(one + alpha)


def test_sm_a1(a1):
    e, s1 = a1.points
    got = sm_cell(a1, s1, side="Bminus")
    alpha = CohScalar.linear_form((1,))
    one = CohScalar.one(1)
    assert got.values[e].is_zero()
    assert got.values[s1] == ScalarFraction.make(alpha, one + alpha)
    # the dense-cell Segre class is the csm class over the ambient class
    amb = ambient_class(a1, H)
    top = sm_cell(a1, s1)
    for v in a1.points:
        assert top.values[v] == csm_cell(a1, s1).values[v] / amb.values[v]


def test_mc_a1(a1):
    e, s1 = a1.points
    y = KScalar.y(1)
    kone = KScalar.one(1)
    ea = KScalar.character((1,))
    em = KScalar.character((-1,))
    assert mc_cell(a1, s1) == LocalizedClass.from_scalars(
        a1, K, {e: ea * (kone + y), s1: kone + y * em}
    )
    assert mc_cell(a1, e) == fixed_point_class(a1, K, e)
    assert mc_cell(a1, e) + mc_cell(a1, s1) == ambient_class(a1, K)


def test_smc_a1(a1):
    e, s1 = a1.points
    y = KScalar.y(1)
    kone = KScalar.one(1)
    em = KScalar.character((-1,))
    got = smc_cell(a1, s1)
    assert got.values[e].is_zero()
    assert got.values[s1] == ScalarFraction.make(kone - em, kone + y * em)
    # base case of the recursion: the B-side point class over lambda_y
    base = cell_family(a1, "smc", "B")[e]
    expect = fixed_point_class(a1, K, e).values[e] / fr(kone + y * KScalar.character((1,)))
    assert base.values[e] == expect
    assert base.values[s1].is_zero()


def test_duality_matrices_identity():
    for label, par in (("A2", ()), ("A3", (1, 3))):
        space = flag_space(label, par)
        rank = space.rs.rank
        csm = cell_family(space, "csm", "B")
        csm_op = cell_family(space, "csm", "Bminus")
        one_h = fr(CohScalar.one(rank))
        for w in space.points:
            for u in space.points:
                val = pair(csm[w], csm_op[u], extra_ambient_weight=True)
                assert val == (one_h if w is u else val) and (w is u) == (val == one_h)
        mc = cell_family(space, "mc", "B")
        smc_op = cell_family(space, "smc", "Bminus")
        one_k = fr(KScalar.one(rank))
        for w in space.points:
            for u in space.points:
                val = pair(mc[w], smc_op[u])
                assert (w is u) == (val == one_k)
                if w is not u:
                    assert val.is_zero()


def test_mc_left_fold_factor_on_gr24():
    # the folding branch multiplies by (-y) to one power exactly
    gr = flag_space("A3", (1, 3))
    w = gr.rs.from_word((1, 2))
    mc = cell_family(gr, "mc", "B")
    y = KScalar.y(3)
    lhs = dl_left(2, mc[w])
    assert lhs == mc[w].scale(-y)
    assert lhs != mc[w]
    # an adjacent up-minimal case has no factor
    w2 = gr.rs.from_word((2,))
    t = gr.rep(gr.rs.simple(1) * w2)
    assert dl_left(1, mc[w2]) == mc[t]


def test_homogenize(a1):
    e, s1 = a1.points
    hz = homogenize_csm(csm_cell(a1, s1))
    hbar = CohScalar.hbar(1)
    alpha = CohScalar.linear_form((1,))
    assert hz == LocalizedClass.from_scalars(a1, H, {e: hbar, s1: hbar + alpha})
    # a constant on a d-dimensional space becomes hbar^d
    a2 = flag_space("A2")
    hz2 = homogenize_csm(LocalizedClass.unit(a2, H))
    hb = CohScalar.hbar(2)
    cube = hb * hb * hb
    assert all(f == fr(cube) for f in hz2.values.values())
    with pytest.raises(ValueError):
        homogenize_csm(hz)  # already involves hbar
    with pytest.raises(ValueError):
        homogenize_csm(sm_cell(a1, s1, side="Bminus"))  # not polynomial


def test_verify_class_theorems_a2_and_selftest():
    rep = verify_class_theorems(flag_space("A2"))
    assert rep.ok
    rep = verify_class_theorems(flag_space("A1"), kinds=("motivic",), corrupt=True)
    assert not rep.ok
    ident, witness = rep.failures()[0]
    assert witness is not None


def test_parabolic_mc_table_size():
    gr = flag_space("A3", (1, 3))
    mc = cell_family(gr, "mc", "B")
    assert len(mc.table) == 6
    # triangular supports
    from gkmflag.roots import bruhat_leq

    for w in gr.points:
        for v in gr.points:
            if not bruhat_leq(v, w):
                assert mc[w].values[v].is_zero()


def test_cell_family_rejects_bad_input():
    a1 = flag_space("A1")
    with pytest.raises(ValueError):
        cell_family(a1, "nope", "B")
    with pytest.raises(ValueError):
        cell_family(a1, "csm", "left")
