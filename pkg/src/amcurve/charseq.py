"""Characteristic sequences and their gcd chains.

A sequence of positive integers (r_0, ..., r_h) carries the derived chain
d_k = gcd(r_0, ..., r_{k-1}) for 1 <= k <= h+1.  Four axioms are checked:

  (1) d_1 > d_2 > ... and d_{h+1} = 1,
  (2) d_k r_k < d_{k+1} r_{k+1} for 1 <= k < h,
  (3) d_h r_h < r_0^2,
  (4) sum_{k=1}^{h} (d_k/d_{k+1} - 1) r_k = (r_0 - 1)^2.

Sequences satisfying all four are exactly the ones realized by coordinate
lines; they correspond one-to-one with strictly decreasing divisor chains
via r_0 = d_1, r_k = d_1^2/d_k - d_{k+1}, and this module implements both
directions of that correspondence plus exhaustive enumeration.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class CharSequence:
    """A positive-integer sequence with its derived gcd chain and ratios.

    dchain[k-1] is d_k; nratios[k-1] is n_k = d_k / d_{k+1} (always an
    integer because each d_{k+1} divides d_k by construction).
    """

    r: tuple[int, ...]
    dchain: tuple[int, ...]
    nratios: tuple[int, ...]

    @classmethod
    def from_terms(cls, r: Iterable[int]) -> "CharSequence":
        terms = _validated_terms(r)
        d = gcd_chain(terms)
        nr = tuple(d[k] // d[k + 1] for k in range(len(d) - 1))
        return cls(terms, d, nr)

    @property
    def initial(self) -> int:
        return self.r[0]

    @property
    def h(self) -> int:
        return len(self.r) - 1

    def __iter__(self):
        return iter(self.r)

    def __len__(self):
        return len(self.r)


@dataclass(frozen=True)
class DivisorChain:
    """Strictly decreasing chain d_1 > ... > d_{h+1} = 1 under divisibility."""

    d: tuple[int, ...]

    @classmethod
    def from_divisors(cls, d: Iterable[int]) -> "DivisorChain":
        chain = tuple(d)
        if not chain:
            raise ValueError("divisor chain must be nonempty")
        if any(v <= 0 for v in chain):
            raise ValueError("divisor chain entries must be positive")
        if chain[-1] != 1:
            raise ValueError("divisor chain must end at 1")
        for k in range(len(chain) - 1):
            if chain[k] <= chain[k + 1]:
                raise ValueError("divisor chain must be strictly decreasing")
            if chain[k] % chain[k + 1] != 0:
                raise ValueError(
                    f"{chain[k + 1]} does not divide {chain[k]} in the chain"
                )
        return cls(chain)

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the four axiom checks, with the exact data they used."""

    sequence: tuple[int, ...]
    dchain: tuple[int, ...]
    ax1: bool
    ax2: bool
    ax3: bool
    ax4: bool
    conductor_lhs: int

    @property
    def all_ok(self) -> bool:
        return self.ax1 and self.ax2 and self.ax3 and self.ax4

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.ax1, self.ax2, self.ax3, self.ax4)


SequenceLike = Union[CharSequence, Sequence[int]]


def _validated_terms(r: SequenceLike) -> tuple[int, ...]:
    if isinstance(r, CharSequence):
        return r.r
    terms = tuple(r)
    if not terms:
        raise ValueError("sequence must be nonempty")
    if any(not isinstance(v, int) or v <= 0 for v in terms):
        raise ValueError("sequence entries must be positive integers")
    return terms


def as_sequence(r: SequenceLike) -> CharSequence:
    return r if isinstance(r, CharSequence) else CharSequence.from_terms(r)


def gcd_chain(r: SequenceLike) -> tuple[int, ...]:
    """(d_1, ..., d_{h+1}) with d_1 = r_0 and d_{k+1} = gcd(d_k, r_k)."""
    terms = _validated_terms(r)
    d = [terms[0]]
    for rk in terms[1:]:
        d.append(math.gcd(d[-1], rk))
    return tuple(d)


def check_axioms(r: SequenceLike) -> AxiomReport:
    """Evaluate axioms (1)-(4) exactly as written.

    For a single-term sequence (h = 0), (2) and (3) are vacuous and the
    sum in (4) is empty, so (4) holds iff r_0 = 1.
    """
    terms = _validated_terms(r)
    d = gcd_chain(terms)
    h = len(terms) - 1
    ax1 = d[-1] == 1 and all(d[k] > d[k + 1] for k in range(h))
    ax2 = all(d[k - 1] * terms[k] < d[k] * terms[k + 1] for k in range(1, h))
    ax3 = h == 0 or d[h - 1] * terms[h] < terms[0] ** 2
    lhs = sum((d[k - 1] // d[k] - 1) * terms[k] for k in range(1, h + 1))
    ax4 = lhs == (terms[0] - 1) ** 2
    return AxiomReport(terms, d, ax1, ax2, ax3, ax4, lhs)


def am_from_chain(chain) -> CharSequence:
    """The unique axiom-satisfying sequence whose gcd chain is the input."""
    if not isinstance(chain, DivisorChain):
        chain = DivisorChain.from_divisors(chain)
    d = chain.d
    n = d[0]
    r = [n]
    for k in range(1, len(d)):
        r.append(n * n // d[k - 1] - d[k])
    seq = CharSequence.from_terms(r)
    assert seq.dchain == d, "constructed sequence does not reproduce its chain"
    assert check_axioms(seq).all_ok, "constructed sequence fails an axiom"
    return seq


def chain_from_am(r: SequenceLike) -> DivisorChain:
    """The gcd chain of a certified sequence; recovery identity re-checked."""
    seq = as_sequence(r)
    rep = check_axioms(seq)
    if not rep.all_ok:
        raise ValueError(
            f"sequence {seq.r} fails axioms {_failed_axioms(rep)}; not an AM sequence"
        )
    d = seq.dchain
    n = seq.r[0]
    for k in range(1, len(d)):
        assert seq.r[k] == n * n // d[k - 1] - d[k], "recovery identity violated"
    return DivisorChain(d)


def _failed_axioms(rep: AxiomReport) -> tuple[int, ...]:
    return tuple(i + 1 for i, ok in enumerate(rep.flags()) if not ok)


@functools.cache
def divisor_chains(n: int) -> tuple[tuple[int, ...], ...]:
    """All strictly decreasing divisor chains from n down to 1, lex order."""
    if n < 1:
        raise ValueError("chain top must be positive")
    if n == 1:
        return ((1,),)
    chains = []
    for m in range(1, n):
        if n % m == 0:
            chains.extend((n,) + tail for tail in divisor_chains(m))
    chains.sort()
    return tuple(chains)


def enumerate_am(n: int) -> list[CharSequence]:
    """Every AM sequence with initial term n, ordered by its divisor chain."""
    if not isinstance(n, int) or n <= 1:
        raise ValueError("initial term must be an integer greater than 1")
    return [am_from_chain(DivisorChain.from_divisors(c)) for c in divisor_chains(n)]


def telescoping_summands(r: SequenceLike) -> tuple[int, ...]:
    """The exact summands (d_k/d_{k+1} - 1)(r_0^2/d_k - d_{k+1} - r_k).

    Requires axioms (1) and (4); their telescoping consequence is that the
    summands total zero.  Axiom (3) additionally forces each summand to be
    nonnegative, which combined with the zero total pins every r_k.
    """
    seq = as_sequence(r)
    rep = check_axioms(seq)
    if not (rep.ax1 and rep.ax4):
        raise ValueError(
            f"sequence {seq.r} fails axioms {_failed_axioms(rep)} among (1), (4)"
        )
    n = seq.r[0]
    d = seq.dchain
    return tuple(
        (d[k - 1] // d[k] - 1) * (n * n // d[k - 1] - d[k] - seq.r[k])
        for k in range(1, len(d))
    )


def telescoping_identity_check(r: SequenceLike) -> int:
    """Exact value of the telescoping sum; 0 whenever axioms (1), (4) hold."""
    seq = as_sequence(r)
    rep = check_axioms(seq)
    summands = telescoping_summands(seq)
    if rep.ax3:
        assert all(s >= 0 for s in summands), "nonnegativity violated despite (3)"
    return sum(summands)
