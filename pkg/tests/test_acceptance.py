"""Acceptance suite: one test per criterion, every equality exact.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Nothing here is tolerance-based; all arithmetic is integer or
rational, so each assertion is an exact equality or an exact inequality.
"""

from fractions import Fraction

import pytest

from amcurve.automorph import decompose_line
from amcurve.chain import (
    build_chain,
    chain_from_skeleton,
    intersection_at_infinity,
    nagata,
    semigroup_sampling_oracle,
    ultrametric_check,
    verify_theorem,
)
from amcurve.charseq import (
    am_from_chain,
    chain_from_am,
    check_axioms,
    divisor_chains,
    enumerate_am,
    telescoping_identity_check,
    telescoping_summands,
)
from amcurve.semigroup import generate, invariants, recover_sequence

MAX_CHAIN_TOP = 60
MAX_SEMIGROUP_INITIAL = 30
MAX_REALIZED_INITIAL = 24


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def _all_chains(limit):
    for n in range(2, limit + 1):
        yield from divisor_chains(n)


@pytest.fixture(scope="module")
def realized():
    """(sequence, chain) for every AM sequence with initial term <= 24."""
    out = []
    for n in range(2, MAX_REALIZED_INITIAL + 1):
        for seq in enumerate_am(n):
            out.append((seq, build_chain(seq)))
    return out


def test_criterion_1_chain_sequence_bijection():
    count = 0
    for c in _all_chains(MAX_CHAIN_TOP):
        seq = am_from_chain(c)
        assert check_axioms(seq).all_ok
        assert chain_from_am(seq).d == c
        assert am_from_chain(chain_from_am(seq)).r == seq.r
        count += 1
    _report(1, count > 200, f"{count} divisor chains with d_1 <= {MAX_CHAIN_TOP} round-trip")


def test_criterion_2_telescoping_identity():
    count = 0
    for c in _all_chains(MAX_CHAIN_TOP):
        seq = am_from_chain(c)
        assert telescoping_identity_check(seq) == 0
        assert all(s >= 0 for s in telescoping_summands(seq))
        count += 1
    _report(2, True, f"telescoping sum is exactly 0 on all {count} sequences")


def test_criterion_3_conductor_genus_recovery():
    count = 0
    for n in range(2, MAX_SEMIGROUP_INITIAL + 1):
        for seq in enumerate_am(n):
            G = generate(seq.r)
            inv = invariants(G)
            assert inv.conductor == (n - 1) * (n - 2)
            assert inv.genus == (n - 1) * (n - 2) // 2
            assert recover_sequence(G, n) == seq.r
            count += 1
    _report(
        3,
        True,
        f"conductor (n-1)(n-2), genus (n-1)(n-2)/2, recovery on {count} semigroups",
    )


def test_criterion_4_realization(realized):
    for seq, ch in realized:
        n = seq.initial
        d = seq.dchain
        xt, yt = ch.param
        assert ch.polys[-1].substitute(xt, yt).is_zero
        assert max(int(xt.degree), int(yt.degree)) == n
        for k, f in enumerate(ch.polys):
            assert int(f.degree) == n // d[k]
        for k in range(seq.h):
            assert int(ch.polys[k].substitute(xt, yt).degree) == d[k + 1]
            assert intersection_at_infinity(ch.polys[k], ch) == seq.r[k + 1]
        rep = verify_theorem(ch, seq)
        assert rep.pairwise_ok and rep.all_ok
        for k in range(1, seq.h + 1):
            assert rep.pairwise[k - 1] == n * n // (d[k - 1] * d[k]) - 1
    _report(4, True, f"{len(realized)} chains over QQ satisfy every exact identity")


def test_criterion_5_decomposition_round_trip(realized):
    for seq, ch in realized:
        skel = decompose_line(ch.polys[-1], ch.polys[-2], ch.pair_witnesses[-1])
        assert skel.degrees == tuple(int(f.degree) for f in ch.polys)
        rep = verify_theorem(chain_from_skeleton(skel))
        assert rep.all_ok
        assert rep.sequence == seq.r
    _report(5, True, f"decomposition reproduces degrees and sequence on {len(realized)} chains")


def test_criterion_6_graph_semigroups():
    for n in range(2, 13):
        seq = am_from_chain([n, 1])
        assert seq.r == (n, n - 1)
        ch = build_chain(seq)
        rep = verify_theorem(ch, seq)
        assert rep.all_ok and rep.sequence == (n, n - 1)
        inv = invariants(generate([n, n - 1]))
        assert inv.genus == (n - 1) * (n - 2) // 2
        assert set(inv.minimal_generators) <= {n, n - 1}
    _report(6, True, "graph chains (n, n-1) for n in 2..12 match <n, n-1>")


def test_criterion_7_nagata_family():
    cases = {
        (2, 3): ("II", (6, 2, 21)),
        (3, 2): ("I", (9, 3, 29)),
        (2, 5): ("II", (10, 6, 57)),
        (5, 2): ("I", (25, 15, 129)),
        (3, 5): ("II", (15, 6, 86)),
        (5, 3): ("I", (25, 10, 134)),
    }
    for (p, a), (case, seq) in cases.items():
        rec = nagata(p, a)
        xt, yt = rec.param
        assert rec.f.substitute(xt, yt).is_zero
        g_image = rec.g.substitute(xt, yt)
        assert g_image.coeffs == {1: g_image.domain.one}
        assert rec.case == case
        assert rec.sequence == seq
        assert rec.axiom_report.flags() == (True, True, False, True)
    _report(7, True, f"all {len(cases)} (p, a) pairs: identities hold, axioms (1)(2)(4) only")


def test_criterion_8_sampling_oracle(realized):
    total = 0
    for seq, ch in realized:
        G = generate(seq.r)
        sample = semigroup_sampling_oracle(ch, trials=200, degree_bound=6, seed=42)
        assert 0 in sample.values
        for v in sample.values:
            assert G.is_member(v)
        total += len(sample.values)
    _report(8, True, f"{total} sampled intersection numbers all lie in their semigroups")


def test_criterion_9_ultrametric(realized):
    for seq, ch in realized:
        rep = verify_theorem(ch, seq)
        ok, witness = ultrametric_check(rep)
        assert ok, f"triple {witness} violates the two-smallest-equal rule"
        n2 = seq.initial ** 2
        d = seq.dchain
        for k in range(1, seq.h + 1):
            assert rep.dlambda[k - 1][k] == 1 - Fraction(d[k - 1] * d[k], n2)
    _report(9, True, f"triangle rule and closed form hold on all {len(realized)} chains")
