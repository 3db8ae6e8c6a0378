import pytest
from hypothesis import given, strategies as st

from amcurve.charseq import (
    CharSequence,
    DivisorChain,
    am_from_chain,
    chain_from_am,
    check_axioms,
    divisor_chains,
    enumerate_am,
    gcd_chain,
    telescoping_identity_check,
    telescoping_summands,
)


def test_gcd_chain_examples():
    assert gcd_chain([6, 4, 17]) == (6, 2, 1)
    assert gcd_chain([9]) == (9,)
    assert gcd_chain([9, 3, 29]) == (9, 3, 1)


def test_gcd_chain_rejects_bad_input():
    with pytest.raises(ValueError):
        gcd_chain([])
    with pytest.raises(ValueError):
        gcd_chain([4, 0, 3])
    with pytest.raises(ValueError):
        gcd_chain([4, -2])


def test_axioms_all_pass():
    rep = check_axioms([6, 4, 17])
    assert rep.flags() == (True, True, True, True)
    # (6/2 - 1)*4 + (2/1 - 1)*17 = 8 + 17 = 25 = (6 - 1)^2
    assert rep.conductor_lhs == 25


def test_axioms_degree_inequality_fails():
    rep = check_axioms([6, 2, 21])
    assert rep.flags() == (True, True, False, True)
    assert rep.conductor_lhs == 25


def test_axioms_chain_does_not_reach_one():
    rep = check_axioms([4, 6])
    assert not rep.ax1
    assert rep.dchain == (4, 2)


def test_axioms_single_term():
    assert check_axioms([1]).all_ok
    rep = check_axioms([5])
    assert (rep.ax1, rep.ax2, rep.ax3) == (False, True, True)
    assert not rep.ax4


def test_am_from_chain_examples():
    assert am_from_chain([6, 2, 1]).r == (6, 4, 17)
    assert am_from_chain([4, 2, 1]).r == (4, 2, 7)
    for n in range(2, 12):
        assert am_from_chain([n, 1]).r == (n, n - 1)


def test_am_from_chain_rejects_invalid_chains():
    with pytest.raises(ValueError):
        am_from_chain([6, 4, 1])  # 4 does not divide 6
    with pytest.raises(ValueError):
        am_from_chain([6, 2])  # does not end at 1
    with pytest.raises(ValueError):
        am_from_chain([2, 2, 1])  # not strictly decreasing
    with pytest.raises(ValueError):
        am_from_chain([])


def test_chain_from_am_examples():
    assert chain_from_am([6, 4, 17]).d == (6, 2, 1)
    assert chain_from_am([4, 2, 7]).d == (4, 2, 1)
    for n in range(2, 12):
        assert chain_from_am([n, n - 1]).d == (n, 1)


def test_chain_from_am_rejects_uncertified():
    with pytest.raises(ValueError):
        chain_from_am([6, 2, 21])  # fails (3)
    with pytest.raises(ValueError):
        chain_from_am([9, 3, 29])


def test_enumerate_small():
    assert [s.r for s in enumerate_am(4)] == [(4, 3), (4, 2, 7)]
    assert [s.r for s in enumerate_am(6)] == [(6, 5), (6, 4, 17), (6, 3, 11)]
    for q in (2, 3, 5, 7, 11, 13):
        assert [s.r for s in enumerate_am(q)] == [(q, q - 1)]


def test_enumerate_rejects_small_initial():
    with pytest.raises(ValueError):
        enumerate_am(1)
    with pytest.raises(ValueError):
        enumerate_am(0)


def test_enumeration_order_is_lexicographic():
    chains = divisor_chains(12)
    assert list(chains) == sorted(chains)
    assert chains[0] == (12, 1)


def test_telescoping_examples():
    assert telescoping_identity_check([6, 4, 17]) == 0
    assert telescoping_summands([6, 4, 17]) == (0, 0)
    assert telescoping_identity_check([4, 2, 7]) == 0
    # holds for the char-p family too: (1) and (4) suffice for the total
    assert telescoping_identity_check([9, 3, 29]) == 0
    assert telescoping_summands([9, 3, 29]) == (6, -6)


def test_telescoping_requires_axioms_one_and_four():
    with pytest.raises(ValueError):
        telescoping_identity_check([4, 6])  # fails (1)
    with pytest.raises(ValueError):
        telescoping_identity_check([6, 4, 18])  # fails (4)


def test_trivial_chain_round_trip():
    assert am_from_chain([1]).r == (1,)
    assert chain_from_am([1]).d == (1,)


def test_round_trip_up_to_24():
    for n in range(2, 25):
        for c in divisor_chains(n):
            seq = am_from_chain(c)
            assert chain_from_am(seq).d == c
            assert am_from_chain(chain_from_am(seq)).r == seq.r


def test_products_strictly_increase():
    # d_k r_k < d_{k+1} r_{k+1} along every enumerated sequence
    for n in range(2, 25):
        for seq in enumerate_am(n):
            prods = [seq.dchain[k] * seq.r[k + 1] for k in range(seq.h)]
            assert all(a < b for a, b in zip(prods, prods[1:]))


def test_derived_fields():
    seq = CharSequence.from_terms([6, 4, 17])
    assert seq.dchain == (6, 2, 1)
    assert seq.nratios == (3, 2)
    assert seq.initial == 6 and seq.h == 2
    assert list(seq) == [6, 4, 17]


def test_divisor_chain_validation():
    with pytest.raises(ValueError):
        DivisorChain.from_divisors([4, 3, 1])
    assert DivisorChain.from_divisors([4, 2, 1]).d == (4, 2, 1)


@st.composite
def _chains(draw):
    factors = draw(st.lists(st.sampled_from([2, 2, 3, 5, 7]), min_size=0, max_size=3))
    d = [1]
    for f in factors:
        d.append(d[-1] * f)
    return tuple(reversed(d))


@given(_chains())
def test_round_trip_random_chains(chain):
    seq = am_from_chain(chain)
    assert check_axioms(seq).all_ok
    assert chain_from_am(seq).d == chain
    assert telescoping_identity_check(seq) == 0
    assert all(s >= 0 for s in telescoping_summands(seq))
