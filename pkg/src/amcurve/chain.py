"""Coordinate-line chains realizing AM characteristic sequences.

Given a certified sequence with initial term n > 1 and ratios n_k, the
recursion f_1 = y, f_2 = y^{n_1} - x, f_{k+1} = f_k^{n_k} - f_{k-1} builds
a chain of curves whose top member realizes the sequence.  Each consecutive
pair carries an automorphism word, so the top curve gets an exact
polynomial parametrization (x(t), y(t)) by pushing (0, t) through the
inverted word.

All intersection numbers at infinity come from one degree ledger: a curve
of degree m with a single branch at infinity, parametrized polynomially
with max t-degree m, meets h = 0 in deg_t h(x(t), y(t)) affine points
counted with multiplicity, so the branch at infinity absorbs
m * deg(h) - deg_t h(x(t), y(t)) of the Bezout total.  No Puiseux
expansions are needed anywhere.

The module also exposes the normalized pairing d(u, v) = i(u, v) /
(deg u * deg v) with its two-smallest-equal triangle rule, a randomized
semigroup-membership oracle over the intersection ledger, and the
classical positive-characteristic family of embedded lines that are not
coordinate lines.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .automorph import (
    AutoWord,
    AutomorphismError,
    ChainSkeleton,
    ElemY,
    affine,
    swap,
)
from .charseq import SequenceLike, as_sequence, check_axioms
from .numeric import RATIONAL, CoeffDomain, DomainMismatchError, is_prime
from .poly import BiPoly, UniPoly, _powers

INFINITE = float("inf")


@dataclass(frozen=True)
class ChainAtInfinity:
    """A realized chain: polynomials, ratios, divisor chain, parametrization.

    polys[k-1] is f_k of degree n/d_k; param = (x(t), y(t)) parametrizes the
    top curve f_{h+1} = 0; pair_witnesses[k-1] has components (f_k, f_{k+1}).
    """

    domain: CoeffDomain
    polys: tuple[BiPoly, ...]
    nratios: tuple[int, ...]
    dchain: tuple[int, ...]
    param: tuple[UniPoly, UniPoly]
    pair_witnesses: tuple[AutoWord, ...]

    @property
    def degree(self) -> int:
        return self.dchain[0]

    @property
    def h(self) -> int:
        return len(self.polys) - 1


def _swap_negate(domain: CoeffDomain):
    # (x, y) -> (y, -x)
    return affine(domain, 0, 1, -1, 0)


def _param_from_word(word: AutoWord) -> tuple[UniPoly, UniPoly]:
    """Parametrize the zero set of the word's first component.

    For a word with components (f, g), the inverse image of (0, t) is a pair
    (x(t), y(t)) with f(x(t), y(t)) = 0 and g(x(t), y(t)) = t; the second
    identity certifies the parametrization covers the curve bijectively.
    """
    domain = word.domain
    zero = UniPoly.zero(domain)
    t = UniPoly.t(domain)
    xt, yt = word.inverse().apply((zero, t))
    f, g = word.components
    assert f.substitute(xt, yt).is_zero, "parametrization does not lie on the curve"
    assert g.substitute(xt, yt) == t, "partner does not restrict to t"
    return xt, yt


def _param_from_pair_witness(w: AutoWord) -> tuple[UniPoly, UniPoly]:
    # w has components (f_k, f_{k+1}); flip so the curve component is first
    return _param_from_word(w.extended(swap(w.domain)))


def parametrize(source) -> tuple[UniPoly, UniPoly]:
    """(x(t), y(t)) for a chain's top curve, or for (f, witness) with the
    witness word's first component equal to f."""
    if isinstance(source, ChainAtInfinity):
        return _param_from_pair_witness(source.pair_witnesses[-1])
    f, word = source
    if not isinstance(word, AutoWord):
        raise TypeError("expected (f, witness) with an AutoWord witness")
    if word.components[0] != f:
        raise AutomorphismError("witness first component differs from f")
    return _param_from_word(word)


def _assert_chain_invariants(chain: ChainAtInfinity) -> None:
    n = chain.degree
    d = chain.dchain
    assert d[-1] == 1 and all(d[k] > d[k + 1] for k in range(len(d) - 1))
    assert chain.nratios == tuple(d[k] // d[k + 1] for k in range(len(d) - 1))
    assert len(chain.polys) == len(d)
    for k, f in enumerate(chain.polys):
        assert int(f.degree) == n // d[k], "chain degree mismatch"
    xt, yt = chain.param
    assert max(int(xt.degree), int(yt.degree)) == n
    assert chain.polys[-1].substitute(xt, yt).is_zero
    for k in range(len(chain.polys) - 1):
        s = chain.polys[k].substitute(xt, yt)
        assert int(s.degree) == d[k + 1], "composition degree mismatch"


def build_chain(r: SequenceLike, domain: CoeffDomain = RATIONAL) -> ChainAtInfinity:
    """Realize a certified AM sequence as an explicit coordinate-line chain.

    Works over QQ and over any GF(p); the construction never divides, so
    the characteristic is unrestricted.
    """
    seq = as_sequence(r)
    rep = check_axioms(seq)
    if not rep.all_ok:
        failed = tuple(i + 1 for i, ok in enumerate(rep.flags()) if not ok)
        raise ValueError(f"sequence {seq.r} fails axioms {failed}; not an AM sequence")
    n = seq.initial
    if n <= 1:
        raise ValueError("initial term must exceed 1")
    nr = seq.nratios
    x = BiPoly.x(domain)
    y = BiPoly.y(domain)
    polys = [y, y ** nr[0] - x]
    word = AutoWord.from_moves(
        domain, (_swap_negate(domain), ElemY(UniPoly.monomial(domain, nr[0])))
    )
    pair_ws = [word]
    for nk in nr[1:]:
        polys.append(polys[-1] ** nk - polys[-2])
        word = word.extended(_swap_negate(domain)).extended(
            ElemY(UniPoly.monomial(domain, nk))
        )
        pair_ws.append(word)
    for k, w in enumerate(pair_ws):
        assert w.components == (polys[k], polys[k + 1])
    param = _param_from_pair_witness(pair_ws[-1])
    chain = ChainAtInfinity(
        domain, tuple(polys), nr, seq.dchain, param, tuple(pair_ws)
    )
    _assert_chain_invariants(chain)
    return chain


def chain_from_skeleton(skel: ChainSkeleton) -> ChainAtInfinity:
    """Dress a decomposition skeleton with ratios, divisors, and a parametrization."""
    degrees = skel.degrees
    n = degrees[-1]
    d = tuple(n // deg for deg in degrees)
    nr = tuple(d[k] // d[k + 1] for k in range(len(d) - 1))
    param = _param_from_pair_witness(skel.pair_witnesses[-1])
    chain = ChainAtInfinity(skel.domain, skel.polys, nr, d, param, skel.pair_witnesses)
    _assert_chain_invariants(chain)
    return chain


def intersection_at_infinity(h: BiPoly, chain: ChainAtInfinity):
    """Intersection number of the chain's branch at infinity with h = 0.

    Computed as n * deg(h) - deg_t h(x(t), y(t)).  Returns the distinguished
    value INFINITE when h vanishes on the curve (h contains it as a
    component), which callers must treat as "not a number".
    """
    if h.is_zero:
        raise ValueError("intersection with the zero polynomial is undefined")
    if h.domain != chain.domain:
        raise DomainMismatchError("polynomial and chain domains differ")
    s = h.substitute(*chain.param)
    if s.is_zero:
        return INFINITE
    val = chain.degree * int(h.degree) - int(s.degree)
    assert val >= 0
    return val


@dataclass(frozen=True)
class IntersectionReport:
    """Exact intersection data for a chain, with the checks it must satisfy.

    dlambda[j][k] is i(branch_j, branch_k) / (deg_j * deg_k); the diagonal
    is None.  `sequence` is the extracted (n, i_1, ..., i_h).
    """

    sequence: tuple[int, ...]
    dchain: tuple[int, ...]
    degrees: tuple[int, ...]
    intersections: tuple[int, ...]
    pairwise: tuple[int, ...]
    dlambda: tuple[tuple[Optional[Fraction], ...], ...]
    degrees_ok: bool
    intersections_ok: bool
    pairwise_ok: bool
    ultrametric_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.degrees_ok
            and self.intersections_ok
            and self.pairwise_ok
            and self.ultrametric_ok
        )

    def checks(self) -> dict:
        return {
            "lemma31_1": self.degrees_ok,
            "lemma31_2": self.intersections_ok,
            "eq5": self.pairwise_ok,
            "ultrametric": self.ultrametric_ok,
        }

    def to_json_obj(self) -> dict:
        return {
            "sequence": [str(v) for v in self.sequence],
            "dchain": [str(v) for v in self.dchain],
            "degrees": [str(v) for v in self.degrees],
            "intersections": [str(v) for v in self.intersections],
            "pairwise": [str(v) for v in self.pairwise],
            "dlambda": [
                ["inf" if v is None else str(v) for v in row] for row in self.dlambda
            ],
            "checks": self.checks(),
        }


def _triangle_violation(matrix):
    """First index triple breaking the two-smallest-equal rule, or None."""
    m = len(matrix)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                vals = sorted((matrix[i][j], matrix[i][k], matrix[j][k]))
                if vals[0] != vals[1]:
                    return (i + 1, j + 1, k + 1)
    return None


def ultrametric_check(report: IntersectionReport):
    """(True, None) when every triple has its two smallest values equal,
    else (False, first violating 1-based triple)."""
    bad = _triangle_violation(report.dlambda)
    return (bad is None), bad


def verify_theorem(chain: ChainAtInfinity, r: SequenceLike = None) -> IntersectionReport:
    """Check the chain against its sequence by pure degree accounting.

    Verifies deg f_k = n/d_k, the extracted intersection numbers against
    r_k, the consecutive pairwise numbers against n^2/(d_k d_{k+1}) - 1,
    the normalized pairing against its closed form 1 - d_k d_{k+1} / n^2,
    and the triangle rule over all index triples.
    """
    d = chain.dchain
    n = chain.degree
    hh = chain.h
    if r is None:
        expected = tuple([n] + [n * n // d[k - 1] - d[k] for k in range(1, len(d))])
    else:
        expected = as_sequence(r).r
        if len(expected) != hh + 1 or expected[0] != n:
            raise ValueError("sequence shape does not match the chain")
    degrees = tuple(int(f.degree) for f in chain.polys)
    degrees_ok = degrees == tuple(n // dk for dk in d)

    inters = []
    for k in range(hh):
        v = intersection_at_infinity(chain.polys[k], chain)
        assert v != INFINITE
        inters.append(v)
    inters = tuple(inters)
    intersections_ok = inters == expected[1:]

    # parametrize every proper subchain curve once
    params = {hh + 1: chain.param}
    for k in range(2, hh + 1):
        params[k] = _param_from_pair_witness(chain.pair_witnesses[k - 2])

    m = hh + 1
    imat = [[None] * m for _ in range(m)]
    for k in range(2, m + 1):
        xt, yt = params[k]
        assert max(int(xt.degree), int(yt.degree)) == degrees[k - 1]
        for j in range(1, k):
            s = chain.polys[j - 1].substitute(xt, yt)
            if s.is_zero:  # pragma: no cover - impossible for genuine chains
                raise AutomorphismError("subchain curves share a component")
            val = degrees[k - 1] * degrees[j - 1] - int(s.degree)
            imat[j - 1][k - 1] = imat[k - 1][j - 1] = val

    pairwise = tuple(imat[k - 1][k] for k in range(1, m))
    pairwise_ok = all(
        pairwise[k - 1] == n * n // (d[k - 1] * d[k]) - 1 for k in range(1, m)
    )

    dlambda = tuple(
        tuple(
            None if j == k else Fraction(imat[j][k], degrees[j] * degrees[k])
            for k in range(m)
        )
        for j in range(m)
    )
    closed_ok = all(
        dlambda[k - 1][k] == 1 - Fraction(d[k - 1] * d[k], n * n) for k in range(1, m)
    )
    ultrametric_ok = closed_ok and _triangle_violation(dlambda) is None

    return IntersectionReport(
        sequence=(n,) + inters,
        dchain=d,
        degrees=degrees,
        intersections=inters,
        pairwise=pairwise,
        dlambda=dlambda,
        degrees_ok=degrees_ok,
        intersections_ok=intersections_ok,
        pairwise_ok=pairwise_ok,
        ultrametric_ok=ultrametric_ok,
    )


@dataclass(frozen=True)
class OracleSample:
    """Intersection numbers drawn from monomials and seeded random curves."""

    values: tuple[int, ...]
    skipped_infinite: int
    skipped_zero: int


def semigroup_sampling_oracle(
    chain: ChainAtInfinity, trials: int = 200, degree_bound: int = 6, seed: int = 42
) -> OracleSample:
    """Sample the intersection ledger as a falsification oracle.

    Evaluates every monomial of total degree <= degree_bound, then `trials`
    random polynomials with coefficients from {-2, -1, 1, 2} on seeded
    supports.  Every finite value must land in the semigroup generated by
    the chain's sequence; callers assert that.  Samples that vanish on the
    curve (infinite intersection) are skipped and counted, as are random
    draws that collapse to zero mod p.
    """
    rng = random.Random(seed)
    domain = chain.domain
    n = chain.degree
    monos = [
        (a, deg - a) for deg in range(degree_bound + 1) for a in range(deg, -1, -1)
    ]
    xt, yt = chain.param
    xpw = _powers(xt, {a for a, _ in monos})
    ypw = _powers(yt, {b for _, b in monos})
    mono_val = {(a, b): xpw[a] * ypw[b] for a, b in monos}

    values = []
    skipped_inf = 0
    skipped_zero = 0
    for a, b in monos:
        s = mono_val[(a, b)]
        if s.is_zero:  # pragma: no cover - impossible over a field
            skipped_inf += 1
            continue
        values.append(n * (a + b) - int(s.degree))
    for _ in range(trials):
        count = rng.randint(1, 5)
        support = rng.sample(monos, count)
        coeffs = [rng.choice((-2, -1, 1, 2)) for _ in support]
        hpoly = BiPoly.from_terms(domain, [(a, b, c) for (a, b), c in zip(support, coeffs)])
        if hpoly.is_zero:
            skipped_zero += 1
            continue
        s = UniPoly.zero(domain)
        for (a, b), c in hpoly.coeffs.items():
            s = s + mono_val[(a, b)] * c
        if s.is_zero:
            skipped_inf += 1
            continue
        val = n * int(hpoly.degree) - int(s.degree)
        assert val >= 0
        values.append(val)
    return OracleSample(tuple(values), skipped_inf, skipped_zero)


@dataclass(frozen=True)
class NagataRecord:
    """An embedded line over GF(p) that is not a coordinate line.

    f vanishes on the parametrized curve and g restricts to t, so the curve
    is an embedded line; its sequence satisfies axioms (1), (2), (4) but
    fails the degree inequality (3), so no coordinate line realizes it.
    """

    p: int
    a: int
    case: str
    f: BiPoly
    g: BiPoly
    param: tuple[UniPoly, UniPoly]
    sequence: tuple[int, int, int]
    axiom_report: object


def nagata(p: int, a: int) -> NagataRecord:
    """The family x(t) = t^(p^2), y(t) = t + t^(ap) over GF(p), gcd(a, p) = 1.

    f = (y^p - x^a)^p - x and g = y - (y^p - x^a)^a; the first two sequence
    terms are read off the parametrization degrees and the third is solved
    from the conductor identity (4), then checked against the closed form
    p^3 + p(a-1) - 1 (a < p) or a^2 p + p(a-1) - 1 (a > p).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not isinstance(a, int) or a <= 1 or math.gcd(a, p) != 1:
        raise ValueError("a must be an integer > 1 coprime to p")
    domain = CoeffDomain(p)
    x = BiPoly.x(domain)
    y = BiPoly.y(domain)
    core = y ** p - x ** a
    f = core ** p - x
    g = y - core ** a
    xt = UniPoly.monomial(domain, p * p)
    yt = UniPoly.t(domain) + UniPoly.monomial(domain, a * p)
    assert f.substitute(xt, yt).is_zero, "f does not vanish on the parametrization"
    assert g.substitute(xt, yt) == UniPoly.t(domain), "g does not restrict to t"

    n = max(p * p, a * p)
    r1 = n - min(p * p, a * p)
    d2 = math.gcd(n, r1)
    assert d2 == p
    numerator = (n - 1) ** 2 - (n // d2 - 1) * r1
    assert numerator % (d2 - 1) == 0
    r2 = numerator // (d2 - 1)
    case = "I" if a < p else "II"
    expected_r2 = p ** 3 + p * (a - 1) - 1 if a < p else a * a * p + p * (a - 1) - 1
    assert r2 == expected_r2, "conductor identity disagrees with the closed form"
    seq = (n, r1, r2)
    rep = check_axioms(seq)
    assert rep.flags() == (True, True, False, True), "unexpected axiom pattern"
    return NagataRecord(p, a, case, f, g, (xt, yt), seq, rep)
