from fractions import Fraction

import pytest

from amcurve.automorph import (
    AutomorphismError,
    AutoWord,
    ElemY,
    decompose_line,
    swap,
)
from amcurve.chain import (
    INFINITE,
    build_chain,
    chain_from_skeleton,
    intersection_at_infinity,
    nagata,
    parametrize,
    semigroup_sampling_oracle,
    ultrametric_check,
    verify_theorem,
)
from amcurve.numeric import RATIONAL, prime_field
from amcurve.poly import parse_bipoly, parse_unipoly
from amcurve.semigroup import generate

GF2 = prime_field(2)


def bi(text, domain=RATIONAL):
    return parse_bipoly(text, domain)


def up(text, domain=RATIONAL):
    return parse_unipoly(text, domain)


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------


def test_build_4_2_7():
    ch = build_chain([4, 2, 7])
    assert [str(p) for p in ch.polys] == ["y", "y^2 - x", "y^4 - 2*x*y^2 + x^2 - y"]
    assert ch.param == (up("t^4 - t"), up("t^2"))
    assert ch.nratios == (2, 2)
    assert ch.dchain == (4, 2, 1)


def test_build_graph_case():
    ch = build_chain([3, 2])
    assert [str(p) for p in ch.polys] == ["y", "y^3 - x"]
    assert ch.param == (up("t^3"), up("t"))


def test_build_6_4_17_degrees():
    ch = build_chain([6, 4, 17])
    assert tuple(int(p.degree) for p in ch.polys) == (1, 3, 6)
    assert ch.nratios == (3, 2)


def test_build_rejects_uncertified():
    with pytest.raises(ValueError):
        build_chain([6, 2, 21])
    with pytest.raises(ValueError):
        build_chain([1])


def test_build_over_prime_fields():
    # the construction is characteristic-free
    for p in (2, 3, 5):
        ch = build_chain([6, 4, 17], prime_field(p))
        rep = verify_theorem(ch, [6, 4, 17])
        assert rep.all_ok


# ---------------------------------------------------------------------------
# parametrization
# ---------------------------------------------------------------------------


def test_parametrize_witnessed_pair():
    ch = build_chain([4, 2, 7])
    w = ch.pair_witnesses[0].extended(swap(RATIONAL))  # components (f_2, f_1)
    assert w.components[0] == bi("y^2 - x")
    assert parametrize((bi("y^2 - x"), w)) == (up("t^2"), up("t"))


def test_parametrize_chain():
    ch = build_chain([4, 2, 7])
    assert parametrize(ch) == ch.param


def test_parametrize_rejects_mismatched_witness():
    ch = build_chain([4, 2, 7])
    with pytest.raises(AutomorphismError):
        parametrize((bi("x"), ch.pair_witnesses[0]))


def test_composition_degrees_along_chain():
    ch = build_chain([8, 4, 14, 31])
    xt, yt = ch.param
    for k, f in enumerate(ch.polys[:-1]):
        assert int(f.substitute(xt, yt).degree) == ch.dchain[k + 1]
    assert ch.polys[-1].substitute(xt, yt).is_zero


# ---------------------------------------------------------------------------
# intersection numbers
# ---------------------------------------------------------------------------


def test_intersection_examples_4_2_7():
    ch = build_chain([4, 2, 7])
    assert intersection_at_infinity(bi("y"), ch) == 2
    assert intersection_at_infinity(bi("y^2 - x"), ch) == 7
    assert intersection_at_infinity(ch.polys[-1], ch) == INFINITE


def test_intersection_examples_graph():
    ch = build_chain([3, 2])
    assert intersection_at_infinity(bi("x"), ch) == 0
    assert intersection_at_infinity(bi("y"), ch) == 2


def test_intersection_of_constant_is_zero():
    ch = build_chain([4, 2, 7])
    assert intersection_at_infinity(bi("1"), ch) == 0
    with pytest.raises(ValueError):
        intersection_at_infinity(bi("0"), ch)


def test_verify_4_2_7():
    ch = build_chain([4, 2, 7])
    rep = verify_theorem(ch, [4, 2, 7])
    assert rep.all_ok
    assert rep.intersections == (2, 7)
    assert rep.pairwise == (1, 7)
    assert rep.dlambda[0][1] == Fraction(1, 2)
    assert rep.dlambda[0][2] == Fraction(1, 2)
    assert rep.dlambda[1][2] == Fraction(7, 8)
    assert ultrametric_check(rep) == (True, None)


def test_verify_6_4_17():
    ch = build_chain([6, 4, 17])
    rep = verify_theorem(ch, [6, 4, 17])
    assert rep.all_ok
    assert rep.intersections == (4, 17)
    assert rep.pairwise == (2, 17)
    n2 = 36
    d = (6, 2, 1)
    for k in (1, 2):
        assert rep.dlambda[k - 1][k] == 1 - Fraction(d[k - 1] * d[k], n2)


def test_verify_graph_case():
    rep = verify_theorem(build_chain([3, 2]), [3, 2])
    assert rep.all_ok
    assert rep.intersections == (2,)


def test_verify_rejects_wrong_sequence_shape():
    ch = build_chain([4, 2, 7])
    with pytest.raises(ValueError):
        verify_theorem(ch, [4, 2])


def test_ultrametric_flags_violations():
    rep = verify_theorem(build_chain([4, 2, 7]))
    broken = tuple(
        tuple(None if j == k else Fraction(1, j + k + 2) for k in range(3))
        for j in range(3)
    )
    bad = rep.__class__(**{**rep.__dict__, "dlambda": broken})
    ok, triple = ultrametric_check(bad)
    assert not ok and triple == (1, 2, 3)


def test_report_json_shape():
    obj = verify_theorem(build_chain([4, 2, 7])).to_json_obj()
    assert obj["sequence"] == ["4", "2", "7"]
    assert obj["dlambda"][0] == ["inf", "1/2", "1/2"]
    assert set(obj["checks"]) == {"lemma31_1", "lemma31_2", "eq5", "ultrametric"}


# ---------------------------------------------------------------------------
# round trip through decomposition
# ---------------------------------------------------------------------------


def test_decompose_round_trip():
    for terms in ([4, 2, 7], [6, 4, 17], [8, 4, 14, 31], [9, 6, 26]):
        ch = build_chain(terms)
        skel = decompose_line(ch.polys[-1], ch.polys[-2], ch.pair_witnesses[-1])
        assert skel.degrees == tuple(int(p.degree) for p in ch.polys)
        ch2 = chain_from_skeleton(skel)
        rep = verify_theorem(ch2)
        assert rep.all_ok
        assert rep.sequence == tuple(terms)


def test_decompose_round_trip_without_witness():
    ch = build_chain([6, 4, 17])
    skel = decompose_line(ch.polys[-1], ch.polys[-2])
    assert verify_theorem(chain_from_skeleton(skel)).sequence == (6, 4, 17)


# ---------------------------------------------------------------------------
# sampling oracle
# ---------------------------------------------------------------------------


def test_oracle_monomial_values():
    ch = build_chain([4, 2, 7])
    sample = semigroup_sampling_oracle(ch, trials=0, degree_bound=3)
    # monomials are ordered by (degree, x-exponent descending)
    by_mono = dict(
        zip(
            [(a, d - a) for d in range(4) for a in range(d, -1, -1)],
            sample.values,
        )
    )
    assert by_mono[(0, 0)] == 0
    assert by_mono[(1, 0)] == 0  # x: 4*1 - 4
    assert by_mono[(0, 1)] == 2  # y: 4*1 - 2
    assert by_mono[(1, 1)] == 2  # xy: 4*2 - 6
    assert by_mono[(0, 2)] == 4  # y^2: 4*2 - 4


def test_oracle_members_and_determinism():
    seq = [6, 4, 17]
    ch = build_chain(seq)
    sample = semigroup_sampling_oracle(ch, trials=100, degree_bound=5, seed=7)
    again = semigroup_sampling_oracle(ch, trials=100, degree_bound=5, seed=7)
    assert sample == again
    other = semigroup_sampling_oracle(ch, trials=100, degree_bound=5, seed=8)
    assert sample != other
    G = generate(seq)
    assert all(G.is_member(v) for v in sample.values)
    assert 0 in sample.values
    assert sample.skipped_infinite == 0


def test_oracle_counts_vanishing_samples():
    # over GF(2) random coefficients -2 and 2 vanish, so some draws collapse
    ch = build_chain([4, 2, 7], GF2)
    sample = semigroup_sampling_oracle(ch, trials=300, degree_bound=3, seed=3)
    G = generate([4, 2, 7])
    assert all(G.is_member(v) for v in sample.values)
    assert sample.skipped_zero > 0


# ---------------------------------------------------------------------------
# the char-p family
# ---------------------------------------------------------------------------


def test_nagata_2_3():
    rec = nagata(2, 3)
    assert rec.case == "II"
    assert rec.sequence == (6, 2, 21)
    assert rec.axiom_report.conductor_lhs == 25
    assert rec.axiom_report.flags() == (True, True, False, True)
    xt, yt = rec.param
    assert rec.f.substitute(xt, yt).is_zero
    assert rec.g.substitute(xt, yt) == up("t", GF2)


def test_nagata_3_2():
    rec = nagata(3, 2)
    assert rec.case == "I"
    assert rec.sequence == (9, 3, 29)
    assert rec.axiom_report.conductor_lhs == 64


def test_nagata_core_identities_char2():
    # y^2 - x^3 restricts to t^2 on the parametrization, and its square to x
    rec = nagata(2, 3)
    core = bi("y^2 - x^3", GF2)
    xt, yt = rec.param
    assert core.substitute(xt, yt) == up("t^2", GF2)
    assert (core ** 2).substitute(xt, yt) == xt


def test_nagata_rejects_bad_parameters():
    with pytest.raises(ValueError):
        nagata(4, 3)
    with pytest.raises(ValueError):
        nagata(3, 1)
    with pytest.raises(ValueError):
        nagata(3, 6)
    with pytest.raises(ValueError):
        nagata(5, 5)


def test_nagata_all_small_pairs():
    expected = {
        (2, 3): (6, 2, 21),
        (3, 2): (9, 3, 29),
        (2, 5): (10, 6, 57),
        (5, 2): (25, 15, 129),
        (3, 5): (15, 6, 86),
        (5, 3): (25, 10, 134),
    }
    for (p, a), seq in expected.items():
        rec = nagata(p, a)
        assert rec.sequence == seq
        assert rec.axiom_report.flags() == (True, True, False, True)


def test_sequence_from_decomposed_unrelated_pair():
    # a hand-built automorphism word outside the standard construction
    w = AutoWord.from_moves(
        RATIONAL, (ElemY(up("t^2")), swap(RATIONAL), ElemY(up("t^3")))
    )
    g, f = w.components
    assert (int(g.degree), int(f.degree)) == (2, 6)
    skel = decompose_line(f, g, w)
    ch = chain_from_skeleton(skel)
    rep = verify_theorem(ch)
    assert rep.all_ok
    assert rep.sequence == (6, 3, 11)
    G = generate(rep.sequence)
    sample = semigroup_sampling_oracle(ch, trials=50, degree_bound=4, seed=1)
    assert all(G.is_member(v) for v in sample.values)
