"""Exact scalars: rationals and rational functions in one parameter ``l``.

Rationals are plain :class:`fractions.Fraction` values.  Elements of Q(l)
are :class:`RationalFunction` instances kept in canonical form (coprime
numerator and denominator, monic denominator).  Arithmetic that produces a
constant collapses back to a ``Fraction``, so matrices that happen to be
rational stay cheap to work with.

Text encoding, shared by every file format::

    "3", "-1/2", "2*l", "(l^2+1)/l", "1/l^2", "(l^2-1/2*l+3)/(l+1)"
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

ZERO = Fraction(0)
ONE = Fraction(1)

Poly = tuple  # coefficients low degree first, no trailing zeros; () is zero


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


# -- polynomials over Q -------------------------------------------------------

def _trim(c: list) -> Poly:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _trim(c)


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * x for x in b)
    if len(b) == 1:
        s = b[0]
        return tuple(x * s for x in a)
    c = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return tuple(c)


def _pscale(a: Poly, s: Fraction) -> Poly:
    if not s:
        return ()
    return tuple(x * s for x in a)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [ZERO] * max(len(a) - db, 0)
    for k in range(len(a) - db - 1, -1, -1):
        coef = r[k + db] / lead
        q[k] = coef
        if coef:
            for j, y in enumerate(b):
                r[k + j] -= coef * y
    return _trim(q), _trim(r[:db])


def _monic(a: Poly) -> Poly:
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def _order(a: Poly) -> int:
    """Lowest degree with a nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("order of zero polynomial")


def _is_monomial(a: Poly) -> bool:
    return _order(a) == len(a) - 1


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q[l]."""
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    if _is_monomial(a) or _is_monomial(b):
        # gcd(c*l^k, p) = l^min(k, ord p)
        k = min(_order(a), _order(b))
        return (ZERO,) * k + (ONE,)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    # primitive remainder sequence over Z keeps coefficient growth in check
    while b:
        a, b = b, _primitive_int(_prem(a, b))
    return _monic(tuple(Fraction(x) for x in a))


def _primitive(a: Poly) -> list[int]:
    scale = 1
    for x in a:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return _primitive_int([int(x * scale) for x in a])


def _primitive_int(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    if not a:
        return a
    content = 0
    for x in a:
        content = math.gcd(content, x)
    if a[-1] < 0:
        content = -content
    return [x // content for x in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (low degree first)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        shift, lr = len(r) - 1 - db, r[-1]
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        while r and not r[-1]:
            r.pop()
    return r


def _peval(a: Poly, c: Fraction) -> Fraction:
    acc = ZERO
    for x in reversed(a):
        acc = acc * c + x
    return acc


def _pformat(a: Poly) -> str:
    if not a:
        return "0"
    out = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        if k == 0:
            term = str(c)
        else:
            mono = "l" if k == 1 else f"l^{k}"
            if c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}*{mono}"
        if out and not term.startswith("-"):
            out.append("+")
        out.append(term)
    return "".join(out)


def _nterms(a: Poly) -> int:
    return sum(1 for x in a if x)


# -- the field Q(l) ------------------------------------------------------------

class RationalFunction:
    """An element ``num/den`` of Q(l) in canonical form.

    Instances are immutable.  Arithmetic results that are constant come
    back as ``Fraction``; a constant ``RationalFunction`` built directly
    still compares and hashes equal to the matching ``Fraction``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(ONE,), *, _canonical=False):
        num = _trim([Fraction(x) for x in num])
        den = _trim([Fraction(x) for x in den])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RationalFunction":
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RationalFunction({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        if self.is_constant:
            return hash(self.num[0] if self.num else ZERO)
        return hash((self.num, self.den))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            if not self.is_constant:
                return False
            return (self.num[0] if self.num else ZERO) == other
        return NotImplemented

    def __neg__(self):
        return RationalFunction._raw(_pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        on, od = _parts(other)
        if on is None:
            return NotImplemented
        if od == self.den:
            return _make(_padd(self.num, on), od)
        if len(od) == 1:
            return _make(_padd(self.num, _pmul(on, self.den)), self.den, canonical=True)
        return _make(_padd(_pmul(self.num, od), _pmul(on, self.den)), _pmul(self.den, od))

    __radd__ = __add__

    def __sub__(self, other):
        on, od = _parts(other)
        if on is None:
            return NotImplemented
        return self + _make(_pneg(on), od, canonical=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return RationalFunction._raw(_pscale(self.num, Fraction(other)), self.den)
        on, od = _parts(other)
        if on is None:
            return NotImplemented
        return _make(_pmul(self.num, on), _pmul(self.den, od))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * inverse(other)

    def __rtruediv__(self, other):
        return inverse(self) * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else inverse(self)
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result


Scalar = Union[Fraction, RationalFunction]


def _parts(x) -> tuple[Poly | None, Poly | None]:
    if isinstance(x, RationalFunction):
        return x.num, x.den
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return ((x,) if x else ()), (ONE,)
    return None, None


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return (), (ONE,)
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = tuple(x / lead for x in num)
        den = tuple(x / lead for x in den)
    return num, den


def _make(num: Poly, den: Poly, canonical: bool = False) -> Scalar:
    if not canonical:
        num, den = _reduce(num, den)
    if len(den) == 1 and len(num) <= 1:
        return num[0] if num else ZERO
    return RationalFunction._raw(num, den)


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings and constant rational functions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, RationalFunction):
        if x.is_constant:
            return x.num[0] if x.num else ZERO
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def inverse(x) -> Scalar:
    x = as_scalar(x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    if isinstance(x, Fraction):
        return 1 / x
    return _make(x.den, x.num)


def lam() -> RationalFunction:
    """The formal parameter ``l``."""
    return RationalFunction._raw((ZERO, ONE), (ONE,))


def is_rational(x) -> bool:
    return not isinstance(x, RationalFunction) or x.is_constant


def eval_at(f, c) -> Fraction:
    """Substitute ``l = c``; raises :class:`PoleError` at a root of the denominator."""
    c = Fraction(c)
    if not isinstance(f, RationalFunction):
        return Fraction(f)
    d = _peval(f.den, c)
    if not d:
        raise PoleError(f"{format_scalar(f)} has a pole at l = {c}")
    return _peval(f.num, c) / d


# -- text encoding -------------------------------------------------------------

def format_scalar(x) -> str:
    if not isinstance(x, RationalFunction):
        return str(Fraction(x))
    if len(x.den) == 1:
        return _pformat(x.num)
    n = _pformat(x.num)
    if _nterms(x.num) > 1 or "/" in n:
        n = f"({n})"
    d = _pformat(x.den)
    if _nterms(x.den) > 1:
        d = f"({d})"
    return f"{n}/{d}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(l)|([-+*/^()]))")


def parse_scalar(text: str, allow_parameter: bool = True) -> Scalar:
    """Parse the text encoding; any well-formed field expression is accepted."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar {text!r} at position {pos}")
        num, var, op = m.groups()
        if var and not allow_parameter:
            raise ValueError(f"parameter 'l' not allowed over Q: {text!r}")
        tokens.append(int(num) if num is not None else (var or op))
        pos = m.end()
    if not tokens:
        raise ValueError("empty scalar")
    parser = _Parser(tokens, text)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in scalar {text!r}")
    return as_scalar(value)


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError(f"unexpected end of scalar {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                value = value * self.unary()
            else:
                value = value / self.unary()
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not isinstance(exp, int):
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            result = ONE
            for _ in range(exp):
                result = result * base
            return result
        return base

    def atom(self):
        tok = self.take()
        if isinstance(tok, int):
            return Fraction(tok)
        if tok == "l":
            return lam()
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return value
        raise ValueError(f"unexpected {tok!r} in scalar {self.text!r}")
