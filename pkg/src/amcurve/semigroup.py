"""Numerical semigroups by brute-force membership tables.

A semigroup is stored as a 0/1 table over [0, bound].  When the generators
are coprime the table provably contains the conductor: the initial bound is
max(gens) + g1*g2 (g1, g2 the two smallest generators), and it grows until
the top g1 entries of the table are all members -- that run proves every
larger integer is a member -- and bound >= conductor + max(gens) holds.
The final bound is asserted, so membership queries never truncate silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

_MAX_TABLE = 200_000_000  # refuse tables past this; keeps memory desk-scale


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable membership table for the semigroup generated by `generators`.

    conductor is None when gcd(generators) > 1 (the gap set is infinite);
    queries beyond the table are only answerable in the coprime case.
    """

    generators: tuple[int, ...]
    bound: int
    table: bytes
    conductor: Optional[int]

    @property
    def gcd(self) -> int:
        return math.gcd(*self.generators) if len(self.generators) > 1 else self.generators[0]

    @property
    def frobenius(self) -> Optional[int]:
        return None if self.conductor is None else self.conductor - 1

    def is_member(self, k: int) -> bool:
        if k < 0:
            return False
        if k <= self.bound:
            return self.table[k] == 1
        if self.conductor is not None:
            return k >= self.conductor
        raise ValueError(
            f"membership of {k} exceeds the table bound {self.bound} and the "
            "generators are not coprime; no conductor exists"
        )

    def members_up_to(self, limit: int) -> tuple[int, ...]:
        return tuple(k for k in range(limit + 1) if self.is_member(k))


@dataclass(frozen=True)
class SemigroupInvariants:
    gaps: tuple[int, ...]
    genus: int
    frobenius: int
    conductor: int
    minimal_generators: tuple[int, ...]


def _dp_table(gens: tuple[int, ...], bound: int) -> bytes:
    table = bytearray(bound + 1)
    table[0] = 1
    for i in range(gens[0], bound + 1):
        for g in gens:
            if g > i:
                break
            if table[i - g]:
                table[i] = 1
                break
    return bytes(table)


def generate(gens: Iterable[int], min_bound: int = 0) -> NumericalSemigroup:
    """Membership table for <gens> up to a provably sufficient bound."""
    generators = tuple(sorted(set(gens)))
    if not generators:
        raise ValueError("generator list must be nonempty")
    if any(not isinstance(g, int) or g <= 0 for g in generators):
        raise ValueError("generators must be positive integers")
    g = generators[0]
    for v in generators[1:]:
        g = math.gcd(g, v)
    g1 = generators[0]
    g2 = generators[1] if len(generators) > 1 else generators[0]
    bound = max(generators[-1] + g1 * g2, min_bound)
    if g > 1:
        if bound > _MAX_TABLE:
            raise ValueError(f"table bound {bound} is too large")
        return NumericalSemigroup(generators, bound, _dp_table(generators, bound), None)
    for _ in range(64):
        if bound > _MAX_TABLE:
            raise ValueError(f"table bound {bound} is too large")
        table = _dp_table(generators, bound)
        if all(table[bound - g1 + 1 : bound + 1]):
            frobenius = next(
                (i for i in range(bound, -1, -1) if not table[i]), -1
            )
            conductor = frobenius + 1
            if bound >= conductor + generators[-1]:
                assert bound >= conductor + generators[-1]
                return NumericalSemigroup(generators, bound, table, conductor)
            bound = conductor + generators[-1]
        else:
            bound *= 2
    raise RuntimeError("membership table failed to stabilize")  # pragma: no cover


def invariants(G: NumericalSemigroup) -> SemigroupInvariants:
    """Gaps, genus, Frobenius number, conductor, and minimal generators."""
    if G.conductor is None:
        raise ValueError("generators are not coprime; the gap set is infinite")
    c = G.conductor
    gaps = tuple(i for i in range(c) if not G.table[i])
    g1 = G.generators[0]
    # members >= c + g1 split off g1 with a member >= c left over, so all
    # minimal generators live below c + g1 (plus g1 itself in the c = 0 case)
    top = max(c + g1 - 1, g1)
    minimal = []
    for m in range(1, top + 1):
        if not G.is_member(m):
            continue
        if any(G.is_member(k) and G.is_member(m - k) for k in range(g1, m - g1 + 1)):
            continue
        minimal.append(m)
    return SemigroupInvariants(gaps, len(gaps), c - 1, c, tuple(minimal))


def recover_sequence(G: NumericalSemigroup, r0: int) -> tuple[int, ...]:
    """Rebuild the generating sequence from (G, r0) by iterated minima.

    Each step appends the least member of G outside the semigroup generated
    so far; the loop stops once the partial semigroup agrees with G on
    [0, conductor + r0], which forces agreement everywhere.
    """
    if G.conductor is None:
        raise ValueError("generators are not coprime; recovery is undefined")
    if not isinstance(r0, int) or r0 <= 0 or not G.is_member(r0):
        raise ValueError(f"{r0} is not a nonzero member of the semigroup")
    test_bound = G.conductor + r0
    if test_bound > G.bound and G.conductor is None:  # pragma: no cover
        raise ValueError("membership table too small for recovery")
    seq = [r0]
    while True:
        sub = generate(seq, min_bound=test_bound)
        new = next(
            (
                j
                for j in range(1, test_bound + 1)
                if G.is_member(j) and not sub.is_member(j)
            ),
            None,
        )
        if new is None:
            return tuple(seq)
        seq.append(new)
