"""Rational functions of q over the rationals, in canonical form.

The canonical form (numerator and denominator coprime, denominator monic)
makes equality decidable by structural comparison, which the identity checks
rely on.  Expansion about q = 0 returns a truncated Laurent series; the
q <-> 1/q inversion check is an exact polynomial identity.

Polynomials are dense tuples of Fractions, constant term first; the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .scalars import as_fraction
from .series import LaurentSeries

Poly = tuple


# -- polynomial helpers --------------------------------------------------------


def _as_poly(value) -> Poly:
    if isinstance(value, (int, Fraction)):
        value = [value]
    return _trim(tuple(as_fraction(c) for c in value))


def _trim(p: Sequence[Fraction]) -> Poly:
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return tuple(p[:n])


def _deg(p: Poly) -> int:
    return len(p) - 1


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pscale(a: Poly, s: Fraction) -> Poly:
    if not s:
        return ()
    return tuple(c * s for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for top in range(len(a) - 1, len(b) - 2, -1):
        c = r[top] * inv_lead
        if c:
            q[top - len(b) + 1] = c
            for j in range(len(b)):
                r[top - len(b) + 1 + j] -= c * b[j]
    return _trim(q), _trim(r)


def _pval(p: Poly) -> int | None:
    for i, c in enumerate(p):
        if c:
            return i
    return None


def _peval(p: Poly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _proot_multiplicity(p: Poly, root: Fraction) -> int:
    """Multiplicity of ``root`` as a zero of p (0 if not a root)."""
    mult = 0
    while p and _peval(p, root) == 0:
        # synthetic division by (q - root)
        out = [Fraction(0)] * (len(p) - 1)
        carry = Fraction(0)
        for i in range(len(p) - 1, 0, -1):
            carry = p[i] + carry * root
            out[i - 1] = carry
        p = _trim(out)
        mult += 1
    return mult


def _pcompose_scaled_power(p: Poly, scale: Fraction, power: int) -> Poly:
    """p(scale * q**power) for an integer power >= 1."""
    if power < 1:
        raise ValueError("power must be >= 1")
    if not p:
        return ()
    out = [Fraction(0)] * ((len(p) - 1) * power + 1)
    s = Fraction(1)
    for j, c in enumerate(p):
        if c:
            out[j * power] += c * s
        s *= scale
    return _trim(out)


def _to_primitive_int(p: Poly) -> tuple:
    """Scale a rational polynomial to a primitive integer one (sign of leading > 0)."""
    denom_lcm = 1
    for c in p:
        denom_lcm = lcm(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p]
    content = 0
    for c in ints:
        content = gcd(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _int_prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of integer polynomials (exact, stays in the integers)."""
    lead_b = b[-1]
    r = list(a)
    while len(r) >= len(b) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1]
        shift = len(r) - len(b)
        r = [x * lead_b for x in r]
        for j in range(len(b)):
            r[shift + j] -= c * b[j]
        r.pop()
    while r and not r[-1]:
        r.pop()
    return tuple(r)


def _int_primitive(p: tuple) -> tuple:
    content = 0
    for c in p:
        content = gcd(content, abs(c))
    if content > 1:
        p = tuple(c // content for c in p)
    if p and p[-1] < 0:
        p = tuple(-c for c in p)
    return p


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via a primitive pseudo-remainder sequence over the integers.

    The common power of q is split off first (cheap, and the q-power is where
    most of the degree lives for the generating functions handled here); the
    primitive-part normalization after every pseudo-division keeps the integer
    coefficients from the exponential blowup of naive fraction Euclid.
    """
    if not a:
        b = _trim(b)
        return _pscale(b, 1 / b[-1]) if b else ()
    if not b:
        a = _trim(a)
        return _pscale(a, 1 / a[-1])
    shift = min(_pval(a), _pval(b))
    x = _to_primitive_int(a[shift:])
    y = _to_primitive_int(b[shift:])
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_primitive(_int_prem(x, y))
    lead = Fraction(x[-1])
    core = tuple(Fraction(c) / lead for c in x)
    if shift:
        core = ((Fraction(0),) * shift) + core
    return core


def _poly_str(p: Poly, variable: str = "q") -> str:
    if not p:
        return "0"
    parts = []
    for deg, c in enumerate(p):
        if not c:
            continue
        if deg == 0:
            parts.append(str(c))
        else:
            power = variable if deg == 1 else f"{variable}^{deg}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
    return " + ".join(parts).replace("+ -", "- ")


# -- rational functions --------------------------------------------------------


class RationalFunction:
    """A ratio of polynomials in q, reduced with monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,)) -> None:
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (Fraction(1),)
        else:
            g = _pgcd(num, den)
            if _deg(g) > 0:
                num, rn = _pdivmod(num, g)
                den, rd = _pdivmod(den, g)
                if rn or rd:
                    raise ArithmeticError("gcd division left a remainder")
            lead = den[-1]
            if lead != 1:
                num = _pscale(num, 1 / lead)
                den = _pscale(den, 1 / lead)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _from_coprime(cls, numerator, denominator) -> "RationalFunction":
        """Fast path for callers that guarantee gcd(num, den) == 1."""
        self = object.__new__(cls)
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (Fraction(1),)
        elif den[-1] != 1:
            lead = den[-1]
            num = _pscale(num, 1 / lead)
            den = _pscale(den, 1 / lead)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)
        return self

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls((), (1,))

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls((1,), (1,))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "RationalFunction":
        """coefficient * q**degree, negative degrees allowed."""
        if degree >= 0:
            return cls([0] * degree + [coefficient], (1,))
        return cls((coefficient,), [0] * (-degree) + [1])

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    def order_at_zero(self) -> int | None:
        """Order of vanishing at q = 0 (negative for a pole, None for 0)."""
        nv = _pval(self.numerator)
        if nv is None:
            return None
        dv = _pval(self.denominator)
        return nv - dv

    def evaluate(self, point):
        """Exact evaluation at a Fraction or GaussianRational point."""
        den = _peval(self.denominator, point)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return _peval(self.numerator, point) / den

    # -- field operations -----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "RationalFunction | None":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return RationalFunction((value,), (1,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = _padd(
            _pmul(self.numerator, other.denominator),
            _pmul(other.numerator, self.denominator),
        )
        return RationalFunction(num, _pmul(self.denominator, other.denominator))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._from_coprime(_pneg(self.numerator), self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            _pmul(self.numerator, other.numerator),
            _pmul(self.denominator, other.denominator),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            _pmul(self.numerator, other.denominator),
            _pmul(self.denominator, other.numerator),
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            return (RationalFunction.one() / self) ** (-exponent)
        result = RationalFunction.one()
        for _ in range(exponent):
            result = result * self
        return result

    # -- substitutions ----------------------------------------------------------

    def substitute_scaled_power(self, scale, power: int) -> "RationalFunction":
        """The composition q -> scale * q**power, exact on canonical forms."""
        scale = as_fraction(scale)
        if not scale:
            raise ValueError("scale must be nonzero")
        # Composition with a nonzero monomial preserves coprimality: a common
        # root of the composites would map to a common root of num and den.
        return RationalFunction._from_coprime(
            _pcompose_scaled_power(self.numerator, scale, power),
            _pcompose_scaled_power(self.denominator, scale, power),
        )

    def reciprocal_substitution(self) -> "RationalFunction":
        """The rational function q -> 1/q, with powers of q cleared."""
        num, den = self.numerator, self.denominator
        if not num:
            return RationalFunction.zero()
        dn, dd = _deg(num), _deg(den)
        rnum = tuple(reversed(num))
        rden = tuple(reversed(den))
        if dd >= dn:
            rnum = ((Fraction(0),) * (dd - dn)) + rnum
        else:
            rden = ((Fraction(0),) * (dn - dd)) + rden
        return RationalFunction(rnum, rden)

    # -- comparison / display -----------------------------------------------------

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.numerator == coerced.numerator and self.denominator == coerced.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __str__(self) -> str:
        if self.denominator == (Fraction(1),):
            return _poly_str(self.numerator)
        return f"({_poly_str(self.numerator)})/({_poly_str(self.denominator)})"

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.numerator)!r}, {list(self.denominator)!r})"


# -- the module-level operations -------------------------------------------------


def ratfn_eq(a: RationalFunction, b: RationalFunction) -> bool:
    """Equality by cross-multiplication (canonical forms make this structural)."""
    return _pmul(a.numerator, b.denominator) == _pmul(b.numerator, a.denominator)


def ratfn_expand(a: RationalFunction, order: int) -> LaurentSeries:
    """Laurent expansion about q = 0 up to and including q**order."""
    if a.is_zero:
        return LaurentSeries.zero("q", order)
    nv = _pval(a.numerator)
    dv = _pval(a.denominator)
    shift = nv - dv
    rel = order - shift
    if rel < 0:
        return LaurentSeries.zero("q", order)
    num_unit = LaurentSeries("q", 0, a.numerator[nv : nv + rel + 1], rel)
    den_unit = LaurentSeries("q", 0, a.denominator[dv : dv + rel + 1], rel)
    return (num_unit * den_unit.inverse()).shifted(shift)


def check_q_inversion_symmetry(a: RationalFunction) -> bool:
    """True iff a(q) == a(1/q) as rational functions.

    Comparison is by exact polynomial identity: writing a = n/d with degrees
    dn, dd, invariance means ``n(q)*rev(d)(q)*q**max(dn-dd,0) ==
    d(q)*rev(n)(q)*q**max(dd-dn,0)``.
    """
    num, den = a.numerator, a.denominator
    if not num:
        return True
    dn, dd = _deg(num), _deg(den)
    rnum = tuple(reversed(num))
    rden = tuple(reversed(den))
    left = _pmul(num, rden)
    right = _pmul(den, rnum)
    if dn >= dd:
        left = ((Fraction(0),) * (dn - dd)) + left
    else:
        right = ((Fraction(0),) * (dd - dn)) + right
    return left == right
