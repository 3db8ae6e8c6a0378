"""Plane polynomial automorphisms as words of affine and elementary moves.

A word is a finite list of moves applied left to right; every move is
invertible by construction, so the whole word is, and its two component
polynomials are cached.  Bare pairs (g, f) are never trusted: they are
either accompanied by a witness word with those components, or certified
here by running the degree reduction all the way down to an invertible
affine pair and replaying the recorded steps backwards into a word.

The reduction step subtracts c * f^N from g, where N = deg g / deg f and c
is the exact ratio of leading forms.  Degrees that fail to divide, or
leading forms that are not proportional (away from the affine base case),
mean the input was not a genuine automorphism pair; both conditions raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .numeric import CoeffDomain, DomainMismatchError, FpElement, Scalar
from .poly import BiPoly, UniPoly, parse_unipoly


class AutomorphismError(ValueError):
    """Witness or pair structure is inconsistent with a plane automorphism."""


class DivisibilityError(AutomorphismError):
    """Neither component degree divides the other."""


class LeadingFormError(AutomorphismError):
    """Leading forms fail to cancel although the degrees divide."""


@dataclass(frozen=True)
class Affine:
    """(x, y) -> (a x + b y + e, c x + d y + f), with ad - bc != 0."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    f: Scalar


@dataclass(frozen=True)
class ElemX:
    """(x, y) -> (x + P(y), y)."""

    shift: UniPoly


@dataclass(frozen=True)
class ElemY:
    """(x, y) -> (x, y + P(x))."""

    shift: UniPoly


Move = Union[Affine, ElemX, ElemY]


def affine(domain: CoeffDomain, a, b, c, d, e=0, f=0) -> Affine:
    """Affine move with coefficients coerced into the domain; checks the determinant."""
    a, b, c, d, e, f = (domain.coerce(v) for v in (a, b, c, d, e, f))
    if a * d - b * c == domain.zero:
        raise AutomorphismError("affine move has zero determinant")
    return Affine(a, b, c, d, e, f)


def swap(domain: CoeffDomain) -> Affine:
    return affine(domain, 0, 1, 1, 0)


def invert_move(move: Move) -> Move:
    if isinstance(move, Affine):
        det = move.a * move.d - move.b * move.c
        ia = move.d / det
        ib = -(move.b / det)
        ic = -(move.c / det)
        id_ = move.a / det
        ie = -(ia * move.e + ib * move.f)
        if_ = -(ic * move.e + id_ * move.f)
        return Affine(ia, ib, ic, id_, ie, if_)
    if isinstance(move, ElemX):
        return ElemX(-move.shift)
    return ElemY(-move.shift)


def _move_domain(move: Move) -> CoeffDomain:
    if isinstance(move, Affine):
        from .numeric import domain_of

        return domain_of(move.a)
    return move.shift.domain


def _on_bipair(move: Move, F: BiPoly, G: BiPoly):
    if isinstance(move, Affine):
        return (
            F * move.a + G * move.b + move.e,
            F * move.c + G * move.d + move.f,
        )
    if isinstance(move, ElemX):
        return F + move.shift.compose_bi(G), G
    return F, G + move.shift.compose_bi(F)


def _on_unipair(move: Move, xt: UniPoly, yt: UniPoly):
    if isinstance(move, Affine):
        return (
            xt * move.a + yt * move.b + move.e,
            xt * move.c + yt * move.d + move.f,
        )
    if isinstance(move, ElemX):
        return xt + move.shift.compose(yt), yt
    return xt, yt + move.shift.compose(xt)


def _on_point(move: Move, px: Scalar, py: Scalar):
    if isinstance(move, Affine):
        return (
            move.a * px + move.b * py + move.e,
            move.c * px + move.d * py + move.f,
        )
    if isinstance(move, ElemX):
        return px + move.shift.eval(py), py
    return px, py + move.shift.eval(px)


@dataclass(frozen=True)
class AutoWord:
    """A move word with its cached component pair (the composite map)."""

    domain: CoeffDomain
    moves: tuple[Move, ...]
    components: tuple[BiPoly, BiPoly]

    @classmethod
    def identity(cls, domain: CoeffDomain) -> "AutoWord":
        return cls(domain, (), (BiPoly.x(domain), BiPoly.y(domain)))

    @classmethod
    def from_moves(cls, domain: CoeffDomain, moves) -> "AutoWord":
        w = cls.identity(domain)
        for m in moves:
            w = w.extended(m)
        return w

    def extended(self, move: Move) -> "AutoWord":
        if _move_domain(move) != self.domain:
            raise DomainMismatchError("move domain differs from word domain")
        comps = _on_bipair(move, *self.components)
        return AutoWord(self.domain, self.moves + (move,), comps)

    def compose(self, other: "AutoWord") -> "AutoWord":
        """This word followed by `other`."""
        if other.domain != self.domain:
            raise DomainMismatchError("cannot compose words over different domains")
        w = self
        for m in other.moves:
            w = w.extended(m)
        return w

    def inverse(self) -> "AutoWord":
        return AutoWord.from_moves(
            self.domain, tuple(invert_move(m) for m in reversed(self.moves))
        )

    def apply(self, pair):
        """Image of a scalar point or of a parametrized pair (x(t), y(t))."""
        px, py = pair
        if isinstance(px, UniPoly) and isinstance(py, UniPoly):
            for m in self.moves:
                px, py = _on_unipair(m, px, py)
            return px, py
        px = self.domain.coerce(px)
        py = self.domain.coerce(py)
        for m in self.moves:
            px, py = _on_point(m, px, py)
        return px, py


def compose(u: AutoWord, v: AutoWord) -> AutoWord:
    return u.compose(v)


def apply(u: AutoWord, pair):
    return u.apply(pair)


def jacobian_determinant(word: AutoWord) -> BiPoly:
    """det of the Jacobian of the cached components; constant for genuine words."""
    F, G = word.components
    return F.dx() * G.dy() - F.dy() * G.dx()


# ---------------------------------------------------------------------------
# degree reduction and decomposition
# ---------------------------------------------------------------------------


def _form_ratio(top: BiPoly, base: BiPoly) -> Optional[Scalar]:
    """c with top == c * base for homogeneous top, base; None if no such c."""
    key = next(iter(base.coeffs))
    if key not in top.coeffs:
        return None
    c = top.coeffs[key] / base.coeffs[key]
    if top == base * c:
        return c
    return None


def _reduce_against(A: BiPoly, B: BiPoly, trail: list, allow_affine_stop: bool = False):
    """Subtract multiples c*B^N from A until deg A < deg B, recording moves.

    Each subtraction appends ElemX(-c t^N) to the trail (on components this
    sends (A, B) to (A - c B^N, B)).  With allow_affine_stop, a pair of
    non-proportional linear forms is left alone for the caller to turn into
    an affine move; in every other stuck case the pair cannot come from a
    plane automorphism and a typed error names the failed condition.
    """
    if B.is_zero or B.degree < 1:
        raise AutomorphismError("reduction divisor must be nonconstant")
    steps = 0
    limit = (int(A.degree) if not A.is_zero else 0) + 1
    while not A.is_zero and A.degree >= B.degree:
        da, db = int(A.degree), int(B.degree)
        if da % db != 0:
            raise DivisibilityError(
                f"degree {da} is not a multiple of degree {db}; "
                "the pair is not a plane automorphism"
            )
        N = da // db
        c = _form_ratio(A.leading_form(), B.leading_form() ** N)
        if c is None:
            if allow_affine_stop and da == db == 1:
                return A
            raise LeadingFormError(
                "leading form is not a constant multiple of the divisor's "
                f"leading form to the power {N}; corrupted witness"
            )
        A = A - (B ** N) * c
        trail.append(ElemX(UniPoly.monomial(B.domain, N, -c)))
        assert A.is_zero or A.degree < da, "reduction failed to lower the degree"
        steps += 1
        if steps > limit:  # pragma: no cover
            raise RuntimeError("reduction exceeded its iteration bound")
    return A


def degree_reduce(g: BiPoly, f: BiPoly, witness: AutoWord):
    """Replace g by g~ with deg g~ < deg f, updating the witness word.

    The witness must have components exactly (g, f) and deg f must exceed 1.
    Returns (g~, updated witness); the updated word has components (g~, f).
    """
    if witness.components != (g, f):
        raise AutomorphismError("witness components differ from (g, f)")
    if f.is_zero or f.degree <= 1:
        raise ValueError("degree reduction requires deg f > 1")
    trail: list = []
    gt = _reduce_against(g, f, trail)
    if gt.is_zero or gt.degree < 1:
        raise AutomorphismError(
            "partner reduced to a constant; (g, f) is not an automorphism pair"
        )
    w = witness
    for m in trail:
        w = w.extended(m)
    assert w.components == (gt, f)
    return gt, w


@dataclass(frozen=True)
class ChainSkeleton:
    """Decomposition output: polynomials of strictly multiplying degrees.

    polys[0] has degree 1 and polys[-1] is the input curve; pair_witnesses[k]
    is a word with components (polys[k], polys[k+1]); witness reproduces the
    original pair (g, f).
    """

    domain: CoeffDomain
    polys: tuple[BiPoly, ...]
    pair_witnesses: tuple[AutoWord, ...]
    witness: AutoWord

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(p.degree) for p in self.polys)


def _linear_parts(P: BiPoly):
    if P.is_zero or P.degree > 1:
        raise AutomorphismError("expected a polynomial of degree at most 1")
    return P.coeff(1, 0), P.coeff(0, 1), P.coeff(0, 0)


def decompose_line(f: BiPoly, g: BiPoly, witness: Optional[AutoWord] = None) -> ChainSkeleton:
    """Decompose the coordinate line f = 0 into a chain of partner curves.

    Starting from the pair (g, f), alternately reduce the higher-degree
    component and swap, collecting the intermediate polynomials; the run
    finishes at an invertible affine pair, and replaying the recorded moves
    backwards from that base yields a certified word for (g, f) as well as
    one for each consecutive pair.  A witness, when supplied, is only
    checked against (g, f); certification never trusts it.
    """
    domain = f.domain
    if g.domain != domain:
        raise DomainMismatchError("f and g live over different domains")
    if f.is_zero or f.degree <= 1:
        raise ValueError("the curve polynomial must have degree greater than 1")
    if g.is_zero:
        raise AutomorphismError("partner polynomial is zero")
    if witness is not None and witness.components != (g, f):
        raise AutomorphismError("witness components differ from (g, f)")

    trail: list = []
    A, B = g, f
    chain_rev = [f]
    marks: list[int] = []
    while True:
        A = _reduce_against(A, B, trail)
        if A.is_zero or A.degree < 1:
            raise AutomorphismError(
                "chain collapsed to a constant; the pair is not an automorphism"
            )
        chain_rev.append(A)
        marks.append(len(trail))
        if A.degree == 1:
            break
        trail.append(swap(domain))
        A, B = B, A

    # drive the degree-1 tail to an invertible affine pair for the base word
    trail.append(swap(domain))
    A, B = B, A
    A = _reduce_against(A, B, trail, allow_affine_stop=True)
    if A.is_zero or A.degree != 1:
        raise AutomorphismError(
            "affine base is degenerate; the pair is not an automorphism"
        )
    ua, ub, ue = _linear_parts(A)
    va, vb, ve = _linear_parts(B)
    if ua * vb - ub * va == domain.zero:
        raise AutomorphismError("affine base has zero determinant")
    base = Affine(ua, ub, va, vb, ue, ve)

    def replay(start: int) -> AutoWord:
        inv = tuple(invert_move(m) for m in reversed(trail[start:]))
        return AutoWord.from_moves(domain, (base,) + inv)

    word = replay(0)
    if word.components != (g, f):  # pragma: no cover - defensive
        raise AutomorphismError("certification failed to reproduce (g, f)")

    polys = tuple(reversed(chain_rev))
    pair_ws = []
    for i, start in enumerate(marks):
        w = replay(start)
        if w.components != (chain_rev[i + 1], chain_rev[i]):  # pragma: no cover
            raise AutomorphismError("internal witness bookkeeping failed")
        pair_ws.append(w)
    pair_ws.reverse()

    degrees = [int(p.degree) for p in polys]
    for k in range(len(degrees) - 1):
        if degrees[k + 1] % degrees[k] != 0 or degrees[k + 1] // degrees[k] < 2:
            raise AutomorphismError(  # pragma: no cover - defensive
                "decomposition degrees do not strictly multiply"
            )
    return ChainSkeleton(domain, polys, tuple(pair_ws), word)


# ---------------------------------------------------------------------------
# JSON-friendly serialization
# ---------------------------------------------------------------------------


def _scalar_str(s: Scalar) -> str:
    return str(s.value) if isinstance(s, FpElement) else str(s)


def move_to_obj(move: Move) -> dict:
    if isinstance(move, Affine):
        return {
            "move": "affine",
            "matrix": [_scalar_str(v) for v in (move.a, move.b, move.c, move.d)],
            "shift": [_scalar_str(move.e), _scalar_str(move.f)],
        }
    tag = "elem_x" if isinstance(move, ElemX) else "elem_y"
    return {"move": tag, "poly": str(move.shift)}


def move_from_obj(obj: dict, domain: CoeffDomain) -> Move:
    kind = obj.get("move")
    if kind == "affine":
        a, b, c, d = (Fraction(v) for v in obj["matrix"])
        e, f = (Fraction(v) for v in obj["shift"])
        return affine(domain, a, b, c, d, e, f)
    if kind == "elem_x":
        return ElemX(parse_unipoly(obj["poly"], domain))
    if kind == "elem_y":
        return ElemY(parse_unipoly(obj["poly"], domain))
    raise ValueError(f"unknown move tag {kind!r}")


def word_to_obj(word: AutoWord) -> list:
    return [move_to_obj(m) for m in word.moves]


def word_from_obj(objs, domain: CoeffDomain) -> AutoWord:
    return AutoWord.from_moves(domain, tuple(move_from_obj(o, domain) for o in objs))
