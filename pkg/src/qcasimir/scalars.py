"""Exact coefficient arithmetic for the quantum-group computations.

Coefficients live in the ring of Laurent polynomials in ``s = q^{1/2}`` over
the rationals, localized at ``q - q^{-1}``.  A :class:`LaurentPoly` stores the
integer exponent of ``s`` (so ``q`` has exponent 2) and a :class:`QScalar`
carries an extra power ``k`` of the denominator ``(q - q^{-1})``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Rational = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in the ring."""


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _parse_rational(text: str) -> Rational:
    return _norm(Fraction(text))


class LaurentPoly:
    """Sparse Laurent polynomial in ``s = q^{1/2}`` with rational coefficients.

    Zero coefficients are never stored, so equality of the coefficient maps is
    equality of polynomials.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        c: Dict[int, Rational] = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = _norm(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Rational]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def coeffs(self) -> Dict[int, Rational]:
        return dict(self._c)

    def items(self) -> Iterable[Tuple[int, Rational]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = _norm(w)
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self._c or not other._c:
            return LaurentPoly._raw({})
        if len(other._c) == 1:
            ((f, w),) = other._c.items()
            return LaurentPoly._raw({e + f: _norm(v * w) for e, v in self._c.items()})
        if len(self._c) == 1:
            return other * self
        c: Dict[int, Rational] = {}
        for e, v in self._c.items():
            for f, w in other._c.items():
                c[e + f] = c.get(e + f, 0) + v * w
        return LaurentPoly._raw({e: _norm(v) for e, v in c.items() if v})

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by ``s**n``."""
        return LaurentPoly._raw({e + n: v for e, v in self._c.items()})

    def evaluate(self, s: complex) -> complex:
        return sum(complex(v) * s**e for e, v in self._c.items())

    def divisible_by_qdiff(self) -> bool:
        # q - q^{-1} = s^{-2}(s^4 - 1); divisibility by s^4 - 1 means the
        # coefficient sums over each exponent class mod 4 all vanish.
        sums = [0, 0, 0, 0]
        for e, v in self._c.items():
            sums[e % 4] += v
        return not any(sums)

    def div_qdiff(self) -> "LaurentPoly":
        """Exact quotient by ``q - q^{-1}``; raises :class:`NotDivisible`."""
        if not self._c:
            return self
        if not self.divisible_by_qdiff():
            raise NotDivisible(f"{self} is not divisible by q - q^-1")
        # p = (s^4 - 1) * Q; walk from the top exponent down.
        c = dict(self._c)
        quot: Dict[int, Rational] = {}
        lo = min(c)
        for e in range(max(c), lo + 3, -1):
            v = c.get(e, 0)
            if v:
                quot[e - 4 + 2] = v
                c[e - 4] = c.get(e - 4, 0) + v
        return LaurentPoly._raw({e: _norm(v) for e, v in quot.items() if v})

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        return format_poly(self)


def div_exact(a: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``c * d == a`` or raise :class:`NotDivisible`."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    d_lo, d_hi = d.min_exp(), d.max_exp()
    lead = d._c[d_hi]
    rem = dict(a._c)
    quot: Dict[int, Rational] = {}
    while rem:
        hi = max(rem)
        if hi - d_hi < min(rem) - d_lo:
            raise NotDivisible(f"{a} is not divisible by {d}")
        factor = _norm(Fraction(rem[hi]) / lead)
        shift = hi - d_hi
        quot[shift] = factor
        for e, v in d._c.items():
            w = rem.get(e + shift, 0) - factor * v
            if w:
                rem[e + shift] = _norm(w)
            else:
                rem.pop(e + shift, None)
    return LaurentPoly._raw(quot)


_QDIFF = LaurentPoly({2: 1, -2: -1})


class QScalar:
    """``numerator * (q - q^{-1})^{-k}`` in canonical form.

    Either ``k == 0`` or the numerator is not divisible by ``q - q^{-1}``.
    The zero element is the empty numerator with ``k == 0``.
    """

    __slots__ = ("num", "k", "_hash")

    def __init__(self, num: LaurentPoly | Rational = 0, k: int = 0):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly({0: num})
        if k < 0:
            for _ in range(-k):
                num = num * _QDIFF
            k = 0
        while k and num._c and num.divisible_by_qdiff():
            num = num.div_qdiff()
            k -= 1
        if not num._c:
            k = 0
        self.num = num
        self.k = k
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, k: int) -> "QScalar":
        obj = cls.__new__(cls)
        obj.num = num
        obj.k = k
        obj._hash = None
        return obj

    def is_zero(self) -> bool:
        return not self.num._c

    def __bool__(self) -> bool:
        return bool(self.num._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QScalar(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.k == other.k and self.num._c == other.num._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.k))
        return self._hash

    def _lift(self, k: int) -> LaurentPoly:
        num = self.num
        for _ in range(k - self.k):
            num = num * _QDIFF
        return num

    def __add__(self, other: "QScalar") -> "QScalar":
        if not isinstance(other, QScalar):
            other = as_scalar(other)
        if not other.num._c:
            return self
        if not self.num._c:
            return other
        if self.k == other.k:
            return QScalar(self.num + other.num, self.k)
        k = max(self.k, other.k)
        return QScalar(self._lift(k) + other._lift(k), k)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar._raw(-self.num, self.k)

    def __sub__(self, other: "QScalar") -> "QScalar":
        if not isinstance(other, QScalar):
            other = as_scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "QScalar":
        return as_scalar(other) - self

    def __mul__(self, other: "QScalar") -> "QScalar":
        if not isinstance(other, QScalar):
            other = as_scalar(other)
        if not self.num._c or not other.num._c:
            return ZERO
        num = self.num * other.num
        if self.k + other.k == 0:
            return QScalar._raw(num, 0)
        return QScalar(num, self.k + other.k)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            raise ValueError("negative powers are not available in the ring")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, q: complex) -> complex:
        """Numerical value at a complex ``q`` (principal square root for ``s``)."""
        s = complex(q) ** 0.5
        return self.num.evaluate(s) / (q - 1 / q) ** self.k

    def __repr__(self) -> str:
        return f"QScalar({self.num!r}, k={self.k})"

    def __str__(self) -> str:
        return format_scalar(self)

    def to_json(self) -> dict:
        return {
            "num": [[e, str(Fraction(v))] for e, v in self.num.items()],
            "denom_pow": self.k,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QScalar":
        num = LaurentPoly({int(e): _parse_rational(v) for e, v in data["num"]})
        return cls(num, int(data["denom_pow"]))


def as_scalar(x) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, LaurentPoly):
        return QScalar(x)
    if isinstance(x, (int, Fraction)):
        return QScalar(LaurentPoly({0: x}))
    raise TypeError(f"cannot interpret {x!r} as a QScalar")


ZERO = QScalar()
ONE = QScalar(1)


def s_pow(n: int, coeff: Rational = 1) -> QScalar:
    """``coeff * q^{n/2}``."""
    return QScalar._raw(LaurentPoly({n: coeff}), 0) if coeff else ZERO


def q_pow(n: Union[int, Fraction]) -> QScalar:
    """``q^n`` for integer or half-integer ``n``."""
    twice = Fraction(n) * 2
    if twice.denominator != 1:
        raise ValueError(f"q^{n} is not a power of q^(1/2)")
    return s_pow(int(twice))


Q = q_pow(1)
QDIFF = QScalar(_QDIFF)
INV_QDIFF = QScalar._raw(LaurentPoly({0: 1}), 1)


def arith(a: QScalar, b: QScalar, op: str) -> QScalar:
    """Dispatch ``add``, ``sub``, ``mul`` or ``neg`` (``b`` ignored for neg)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def q_integer(n: int) -> QScalar:
    """The q-integer ``(q^n - q^{-n}) / (q - q^{-1})``."""
    if n < 0:
        raise ValueError("q_integer expects n >= 0")
    return QScalar(LaurentPoly({2 * k: 1 for k in range(1 - n, n, 2)}))


def scalar_div_exact(a: QScalar, b: QScalar) -> QScalar:
    """Exact quotient ``a / b`` inside the localized ring."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    den = b.num
    extra = 0
    while den.divisible_by_qdiff():
        den = den.div_qdiff()
        extra += 1
    num = a.num
    for _ in range(b.k):
        num = num * _QDIFF
    return QScalar(div_exact(num, den), a.k + extra)


def _fmt_exp(e: int) -> str:
    if e % 2 == 0:
        p = e // 2
        return "q" if p == 1 else f"q^{{{p}}}"
    return f"q^{{{e}/2}}"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, v in sorted(p._c.items(), reverse=True):
        neg = v < 0
        a = -v if neg else v
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _fmt_exp(e)
        else:
            body = f"{a}{_fmt_exp(e)}" if isinstance(a, int) else f"({a}){_fmt_exp(e)}"
        parts.append(("- " if neg else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def format_scalar(x: QScalar, denom: str = "(q-q^{-1})") -> str:
    num = format_poly(x.num)
    if x.k == 0:
        return num
    if len(x.num._c) > 1:
        num = f"({num})"
    d = denom if x.k == 1 else f"{denom}^{{{x.k}}}"
    return f"{num}/{d}"


def latex_scalar(x: QScalar) -> str:
    """LaTeX form; the empty string stands for the coefficient 1."""
    if x == ONE:
        return ""
    if x == -ONE:
        return "-"
    num = format_poly(x.num)
    if x.k == 0:
        return num if len(x.num._c) == 1 else f"({num})"
    if num == "1":
        return f"(q-q^{{-1}})^{{-{x.k}}}"
    if len(x.num._c) > 1:
        num = f"({num})"
    return f"{num}(q-q^{{-1}})^{{-{x.k}}}"
