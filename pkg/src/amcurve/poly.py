"""Sparse exact polynomials in one variable t (curve parametrizations) and
in two variables x, y (plane curves and automorphism components), with a
small text grammar for parsing and deterministic printing.

Zero coefficients are never stored, so the zero polynomial has empty
support; its degree is -inf, which keeps degree comparisons meaningful
after exact cancellation.  Printing is graded (total degree descending,
x-exponent before y within a degree; plain degree order for t) and
byte-stable, and parse(str(p)) == p.

Grammar (ASCII, whitespace insignificant):

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nonneg-int)?
    atom   := int-literal | rational-literal ('a/b') | 'x' | 'y' | 't'
            | '(' expr ')'

Juxtaposition is not multiplication: "2x" is a syntax error, write "2*x".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .numeric import CoeffDomain, DomainMismatchError, FpElement, Scalar

NEG_INF = float("-inf")

Degree = Union[int, float]


def _powers(base, exponents):
    """base**e for every needed exponent, computed once, ascending."""
    table = {}
    prev_e = 0
    prev = base ** 0
    for e in sorted(set(exponents)):
        prev = prev * base ** (e - prev_e)
        prev_e = e
        table[e] = prev
    return table


class UniPoly:
    """Sparse polynomial in t over an exact coefficient domain."""

    __slots__ = ("domain", "coeffs", "_degree")

    def __init__(self, domain: CoeffDomain, coeffs: dict):
        self.domain = domain
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}
        self._degree = max(self.coeffs) if self.coeffs else NEG_INF

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain: CoeffDomain) -> "UniPoly":
        return cls(domain, {})

    @classmethod
    def one(cls, domain: CoeffDomain) -> "UniPoly":
        return cls.constant(domain, 1)

    @classmethod
    def constant(cls, domain: CoeffDomain, c) -> "UniPoly":
        return cls(domain, {0: domain.coerce(c)})

    @classmethod
    def t(cls, domain: CoeffDomain) -> "UniPoly":
        return cls(domain, {1: domain.one})

    @classmethod
    def monomial(cls, domain: CoeffDomain, exp: int, coeff=1) -> "UniPoly":
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        return cls(domain, {exp: domain.coerce(coeff)})

    @classmethod
    def from_terms(cls, domain: CoeffDomain, terms: Iterable) -> "UniPoly":
        acc: dict = {}
        for exp, coeff in terms:
            if exp < 0:
                raise ValueError("exponents must be nonnegative")
            acc[exp] = acc.get(exp, domain.zero) + domain.coerce(coeff)
        return cls(domain, acc)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> Degree:
        return self._degree

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exp: int) -> Scalar:
        return self.coeffs.get(exp, self.domain.zero)

    def terms(self):
        """(exponent, coefficient) pairs, highest degree first."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def _check(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.domain != self.domain:
                raise DomainMismatchError(
                    f"polynomials over {self.domain} and {other.domain}"
                )
            return other
        if isinstance(other, (int, Fraction, FpElement)):
            return UniPoly.constant(self.domain, other)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        acc = dict(self.coeffs)
        for e, c in o.coeffs.items():
            acc[e] = acc.get(e, self.domain.zero) + c
        return UniPoly(self.domain, acc)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.domain, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FpElement)):
            s = self.domain.coerce(other)
            return UniPoly(self.domain, {e: c * s for e, c in self.coeffs.items()})
        o = self._check(other)
        if o is None:
            return NotImplemented
        acc: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                prod = c1 * c2
                if e in acc:
                    acc[e] = acc[e] + prod
                else:
                    acc[e] = prod
        return UniPoly(self.domain, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = UniPoly.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation / composition -------------------------------------------

    def eval(self, v) -> Scalar:
        """Value at a scalar point."""
        s = self.domain.coerce(v)
        acc = self.domain.zero
        for e, c in self.coeffs.items():
            acc = acc + c * s ** e
        return acc

    def compose(self, q: "UniPoly") -> "UniPoly":
        """self(q(t)), exactly."""
        if q.domain != self.domain:
            raise DomainMismatchError("composition across domains")
        pw = _powers(q, self.coeffs.keys())
        acc = UniPoly.zero(self.domain)
        for e, c in self.coeffs.items():
            acc = acc + pw[e] * c
        return acc

    def compose_bi(self, b: "BiPoly") -> "BiPoly":
        """self evaluated at a two-variable polynomial."""
        if b.domain != self.domain:
            raise DomainMismatchError("composition across domains")
        pw = _powers(b, self.coeffs.keys())
        acc = BiPoly.zero(self.domain)
        for e, c in self.coeffs.items():
            acc = acc + pw[e] * c
        return acc

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __str__(self):
        return _render([((e,), c) for e, c in self.terms()], ("t",))

    def __repr__(self):
        return f"UniPoly({self.domain}, {str(self)!r})"


class BiPoly:
    """Sparse polynomial in x, y over an exact coefficient domain."""

    __slots__ = ("domain", "coeffs", "_degree")

    def __init__(self, domain: CoeffDomain, coeffs: dict):
        self.domain = domain
        self.coeffs = {k: c for k, c in coeffs.items() if c != 0}
        self._degree = max(a + b for a, b in self.coeffs) if self.coeffs else NEG_INF

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain: CoeffDomain) -> "BiPoly":
        return cls(domain, {})

    @classmethod
    def one(cls, domain: CoeffDomain) -> "BiPoly":
        return cls.constant(domain, 1)

    @classmethod
    def constant(cls, domain: CoeffDomain, c) -> "BiPoly":
        return cls(domain, {(0, 0): domain.coerce(c)})

    @classmethod
    def x(cls, domain: CoeffDomain) -> "BiPoly":
        return cls(domain, {(1, 0): domain.one})

    @classmethod
    def y(cls, domain: CoeffDomain) -> "BiPoly":
        return cls(domain, {(0, 1): domain.one})

    @classmethod
    def monomial(cls, domain: CoeffDomain, a: int, b: int, coeff=1) -> "BiPoly":
        if a < 0 or b < 0:
            raise ValueError("exponents must be nonnegative")
        return cls(domain, {(a, b): domain.coerce(coeff)})

    @classmethod
    def from_terms(cls, domain: CoeffDomain, terms: Iterable) -> "BiPoly":
        acc: dict = {}
        for a, b, coeff in terms:
            if a < 0 or b < 0:
                raise ValueError("exponents must be nonnegative")
            key = (a, b)
            acc[key] = acc.get(key, domain.zero) + domain.coerce(coeff)
        return cls(domain, acc)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> Degree:
        """Total degree; -inf for the zero polynomial."""
        return self._degree

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, a: int, b: int) -> Scalar:
        return self.coeffs.get((a, b), self.domain.zero)

    def terms(self):
        """((a, b), coefficient) pairs in graded order, x before y."""
        return sorted(
            self.coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]), reverse=True
        )

    def leading_form(self) -> "BiPoly":
        """Homogeneous part of top total degree."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading form")
        d = self._degree
        return BiPoly(self.domain, {k: c for k, c in self.coeffs.items() if k[0] + k[1] == d})

    def dx(self) -> "BiPoly":
        return BiPoly(
            self.domain,
            {(a - 1, b): c * a for (a, b), c in self.coeffs.items() if a > 0},
        )

    def dy(self) -> "BiPoly":
        return BiPoly(
            self.domain,
            {(a, b - 1): c * b for (a, b), c in self.coeffs.items() if b > 0},
        )

    def _check(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.domain != self.domain:
                raise DomainMismatchError(
                    f"polynomials over {self.domain} and {other.domain}"
                )
            return other
        if isinstance(other, (int, Fraction, FpElement)):
            return BiPoly.constant(self.domain, other)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        acc = dict(self.coeffs)
        for k, c in o.coeffs.items():
            acc[k] = acc.get(k, self.domain.zero) + c
        return BiPoly(self.domain, acc)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.domain, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FpElement)):
            s = self.domain.coerce(other)
            return BiPoly(self.domain, {k: c * s for k, c in self.coeffs.items()})
        o = self._check(other)
        if o is None:
            return NotImplemented
        acc: dict = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in o.coeffs.items():
                k = (a1 + a2, b1 + b2)
                prod = c1 * c2
                if k in acc:
                    acc[k] = acc[k] + prod
                else:
                    acc[k] = prod
        return BiPoly(self.domain, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = BiPoly.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation ----------------------------------------------------------

    def substitute(self, xt: UniPoly, yt: UniPoly) -> UniPoly:
        """self(xt(t), yt(t)), exactly."""
        if xt.domain != self.domain or yt.domain != self.domain:
            raise DomainMismatchError("substitution across domains")
        xpw = _powers(xt, {a for a, _ in self.coeffs})
        ypw = _powers(yt, {b for _, b in self.coeffs})
        acc = UniPoly.zero(self.domain)
        for (a, b), c in self.coeffs.items():
            acc = acc + (xpw[a] * ypw[b]) * c
        return acc

    def eval(self, vx, vy) -> Scalar:
        sx = self.domain.coerce(vx)
        sy = self.domain.coerce(vy)
        acc = self.domain.zero
        for (a, b), c in self.coeffs.items():
            acc = acc + c * sx ** a * sy ** b
        return acc

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __str__(self):
        return _render([(k, c) for k, c in self.terms()], ("x", "y"))

    def __repr__(self):
        return f"BiPoly({self.domain}, {str(self)!r})"


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _coeff_parts(c) -> tuple[bool, str]:
    """(is_negative, printed absolute value); residues print as 0..p-1."""
    if isinstance(c, FpElement):
        return False, str(c.value)
    return c < 0, str(abs(c))


def _monomial_str(exps: tuple, names: tuple) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _render(terms, names) -> str:
    if not terms:
        return "0"
    pieces = []
    for exps, c in terms:
        neg, cs = _coeff_parts(c)
        mono = _monomial_str(exps, names)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    """Syntax or variable error in polynomial text; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            if ch in "xyt":
                toks.append(("var", ch, i))
                i += 1
                continue
            raise ParseError(f"unknown variable {ch!r}", i)
        if ch in "+-*/^()":
            toks.append(("sym", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", None, n))
    return toks


class _Parser:
    """Recursive descent over the grammar; produces a tiny tuple AST."""

    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        kind, val, _ = self.peek()
        neg = False
        if kind == "sym" and val in "+-":
            self.take()
            neg = val == "-"
        node = self.term()
        if neg:
            node = ("neg", node)
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                rhs = self.term()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected a nonnegative integer exponent", pos)
            node = ("pow", node, val)
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            k2, v2, _ = self.peek()
            if k2 == "sym" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int":
                    raise ParseError("expected an integer denominator", p3)
                if v3 == 0:
                    raise ParseError("zero denominator in rational literal", p3)
                return ("num", Fraction(val, v3), pos)
            return ("num", Fraction(val), pos)
        if kind == "var":
            return ("var", val, pos)
        if kind == "sym" and val == "(":
            node = self.expr()
            kind, val, pos = self.take()
            if not (kind == "sym" and val == ")"):
                raise ParseError("expected ')'", pos)
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def _vars_in(node, acc):
    tag = node[0]
    if tag == "var":
        acc.setdefault(node[1], node[2])
    elif tag == "neg":
        _vars_in(node[1], acc)
    elif tag in ("add", "sub", "mul"):
        _vars_in(node[1], acc)
        _vars_in(node[2], acc)
    elif tag == "pow":
        _vars_in(node[1], acc)


def _eval_ast(node, domain: CoeffDomain, uni: bool):
    tag = node[0]
    if tag == "num":
        try:
            c = domain.coerce(node[1])
        except ZeroDivisionError:
            raise ParseError(
                "coefficient denominator is divisible by the field characteristic",
                node[2],
            ) from None
        return UniPoly.constant(domain, c) if uni else BiPoly.constant(domain, c)
    if tag == "var":
        name = node[1]
        if uni:
            if name != "t":
                raise ParseError(f"variable {name!r} not allowed here", node[2])
            return UniPoly.t(domain)
        if name == "x":
            return BiPoly.x(domain)
        if name == "y":
            return BiPoly.y(domain)
        raise ParseError("variable 't' not allowed here", node[2])
    if tag == "neg":
        return -_eval_ast(node[1], domain, uni)
    if tag == "add":
        return _eval_ast(node[1], domain, uni) + _eval_ast(node[2], domain, uni)
    if tag == "sub":
        return _eval_ast(node[1], domain, uni) - _eval_ast(node[2], domain, uni)
    if tag == "mul":
        return _eval_ast(node[1], domain, uni) * _eval_ast(node[2], domain, uni)
    if tag == "pow":
        return _eval_ast(node[1], domain, uni) ** node[2]
    raise AssertionError(f"unhandled AST node {tag}")


def parse(text: str, domain: CoeffDomain, kind: str = "auto"):
    """Parse polynomial text into a BiPoly or UniPoly over the domain.

    kind = "bi" forces an x,y-polynomial, "uni" a t-polynomial; "auto"
    decides from the variables used (pure constants come back as BiPoly).
    """
    parser = _Parser(_tokenize(text))
    ast = parser.expr()
    kind_tok, val, pos = parser.peek()
    if kind_tok != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    used: dict = {}
    _vars_in(ast, used)
    if kind == "auto":
        kind = "uni" if "t" in used else "bi"
    if kind not in ("bi", "uni"):
        raise ValueError(f"unknown parse kind {kind!r}")
    if kind == "uni":
        for name in ("x", "y"):
            if name in used:
                raise ParseError(f"variable {name!r} not allowed here", used[name])
    elif "t" in used:
        raise ParseError("variable 't' not allowed here", used["t"])
    return _eval_ast(ast, domain, kind == "uni")


def parse_bipoly(text: str, domain: CoeffDomain) -> BiPoly:
    return parse(text, domain, kind="bi")


def parse_unipoly(text: str, domain: CoeffDomain) -> UniPoly:
    return parse(text, domain, kind="uni")
