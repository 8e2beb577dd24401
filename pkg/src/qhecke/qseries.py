"""Truncated Laurent q-series with exact rational coefficients.

A QSeries stores coefficients on an explicit window [lo, hi): below lo the
series is exactly zero, at or above hi it is unknown (not asserted zero).
All arithmetic propagates windows so that a coefficient inside a result's
window is never wrong, only possibly absent.  Values are immutable and all
operations are pure.

Coefficients are ints, or Fraction only when the denominator exceeds 1, so
integrality is visible in the type and big-integer fast paths stay cheap.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int

from .errors import EmptyWindow, NotInvertible, OutOfWindow

Coeff = int | Fraction


def _canon(x) -> Coeff:
    """Collapse Fractions with denominator 1 to int; reject inexact types."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"exact coefficient required, got {type(x).__name__}")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# ---------------------------------------------------------------------------
# Convolution kernels.
#
# Schoolbook convolution is the semantic contract.  For windows past the
# cutoff the same product is computed by Kronecker substitution: coefficients
# are packed into one big integer per sign part and multiplied with GMP.
# Both paths are exact and bit-identical.

_PACKED_CUTOFF = 40


def _conv_schoolbook(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _pack(vals: list, width: int) -> int:
    buf = bytearray(width * len(vals))
    for i, v in enumerate(vals):
        if v:
            buf[i * width:(i + 1) * width] = v.to_bytes(width, "little")
    return int.from_bytes(bytes(buf), "little")


def _unpack(n: int, width: int, count: int) -> list:
    data = n.to_bytes(width * (count + 1), "little")
    return [
        int.from_bytes(data[i * width:(i + 1) * width], "little")
        for i in range(count)
    ]


def _conv_packed(a: list, b: list) -> list:
    """Integer convolution via packed big-integer multiplication."""
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    cnt = len(a) + len(b) - 1
    if amax == 0 or bmax == 0:
        return [0] * cnt
    # Digit bound: each convolution digit of a sign part is at most
    # amax * bmax * min(len); the two parts are summed, hence the factor 2.
    bound = 2 * amax * bmax * min(len(a), len(b))
    width = bound.bit_length() // 8 + 1
    a_pos = _mpz(_pack([x if x > 0 else 0 for x in a], width))
    a_neg = _mpz(_pack([-x if x < 0 else 0 for x in a], width))
    b_pos = _mpz(_pack([x if x > 0 else 0 for x in b], width))
    b_neg = _mpz(_pack([-x if x < 0 else 0 for x in b], width))
    pos = _unpack(int(a_pos * b_pos + a_neg * b_neg), width, cnt)
    neg = _unpack(int(a_pos * b_neg + a_neg * b_pos), width, cnt)
    return [p - n for p, n in zip(pos, neg)]


def _common_denominator(vals: list) -> int:
    d = 1
    for v in vals:
        if isinstance(v, Fraction):
            d = lcm(d, v.denominator)
    return d


def _to_int_list(vals: list, d: int) -> list:
    if d == 1:
        return vals
    return [
        v.numerator * (d // v.denominator) if isinstance(v, Fraction) else v * d
        for v in vals
    ]


def _convolve(a: list, b: list) -> list:
    """Exact full convolution of coefficient lists (ints or Fractions)."""
    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = _to_int_list(a, da)
    ib = _to_int_list(b, db)
    if min(len(ia), len(ib)) < _PACKED_CUTOFF:
        out = _conv_schoolbook(ia, ib)
    else:
        out = _conv_packed(ia, ib)
    d = da * db
    if d != 1:
        out = [_canon(Fraction(c, d)) for c in out]
    return out


def _inv_list(a: list, w: int) -> list:
    """First w coefficients of 1/A(q) for a coefficient list with a[0] != 0.

    Newton doubling (x <- x + x*(1 - a*x)) on top of _convolve; quadratic
    recurrence below a small size where doubling does not pay off.
    """
    a0 = a[0]
    inv0 = _canon(Fraction(1, a0) if isinstance(a0, int) else 1 / a0)
    if w <= 64:
        b = [inv0] + [0] * (w - 1)
        for k in range(1, w):
            s = 0
            for i in range(1, min(k, len(a) - 1) + 1):
                s += a[i] * b[k - i]
            b[k] = _canon(-s * inv0)
        return b
    x = [inv0]
    t = 1
    while t < w:
        t2 = min(2 * t, w)
        prod = _convolve(a[:t2], x)[:t2]
        err = [-c for c in prod]
        err[0] += 1
        # err vanishes below t, so the correction only appends new terms
        corr = _convolve(x, err)[:t2]
        x = x + [_canon(c) for c in corr[t:t2]]
        t = t2
    return x


# ---------------------------------------------------------------------------


class QSeries:
    """Exact Laurent series truncation on the window [lo, hi)."""

    __slots__ = ("_lo", "_hi", "_c")

    def __init__(self, lo: int, hi: int, coeffs=()):
        if hi <= lo:
            raise EmptyWindow(f"window [{lo}, {hi}) is empty")
        c = tuple(_canon(x) for x in coeffs)
        if len(c) != hi - lo:
            raise ValueError(
                f"expected {hi - lo} coefficients for window [{lo}, {hi}), got {len(c)}"
            )
        self._lo = lo
        self._hi = hi
        self._c = c

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, lo: int, hi: int) -> "QSeries":
        return cls(lo, hi, [0] * (hi - lo))

    @classmethod
    def one(cls, hi: int = 1) -> "QSeries":
        return cls(0, hi, [1] + [0] * (hi - 1))

    @classmethod
    def monomial(cls, exponent: int, coeff: Coeff = 1, hi: int | None = None) -> "QSeries":
        hi = exponent + 1 if hi is None else hi
        c = [0] * (hi - exponent)
        c[0] = coeff
        return cls(exponent, hi, c)

    @classmethod
    def from_terms(cls, lo: int, hi: int, terms) -> "QSeries":
        """Densify sparse (exponent, coefficient) data onto [lo, hi)."""
        items = terms.items() if isinstance(terms, dict) else terms
        c = [0] * (hi - lo)
        for e, v in items:
            if not lo <= e < hi:
                raise ValueError(f"exponent {e} outside window [{lo}, {hi})")
            c[e - lo] = v
        return cls(lo, hi, c)

    # -- accessors -----------------------------------------------------------

    @property
    def lo(self) -> int:
        return self._lo

    @property
    def hi(self) -> int:
        return self._hi

    @property
    def width(self) -> int:
        return self._hi - self._lo

    @property
    def coefficients(self) -> tuple:
        """Dense coefficient tuple, index i holding the coefficient of q^(lo+i)."""
        return self._c

    def coeff(self, e: int) -> Coeff:
        """Exact coefficient of q^e; zero below lo, OutOfWindow at or past hi."""
        if e >= self._hi:
            raise OutOfWindow(f"exponent {e} is beyond precision bound {self._hi}")
        if e < self._lo:
            return 0
        return self._c[e - self._lo]

    def terms(self):
        """Iterate (exponent, coefficient) over nonzero stored entries."""
        for i, c in enumerate(self._c):
            if c:
                yield self._lo + i, c

    def is_integral(self) -> bool:
        """True iff every stored coefficient has denominator 1."""
        return all(isinstance(c, int) for c in self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    # -- window management ---------------------------------------------------

    def restrict(self, lo: int | None = None, hi: int | None = None) -> "QSeries":
        """Move to a sub-window (or extend lo downward over known zeros)."""
        new_lo = self._lo if lo is None else lo
        new_hi = self._hi if hi is None else hi
        if new_hi > self._hi:
            raise ValueError(f"cannot extend hi from {self._hi} to {new_hi}")
        if new_hi <= new_lo:
            raise EmptyWindow(f"window [{new_lo}, {new_hi}) is empty")
        if new_lo > self._lo:
            if any(self._c[: new_lo - self._lo]):
                raise ValueError("cannot raise lo past a nonzero coefficient")
            c = self._c[new_lo - self._lo: new_hi - self._lo]
        else:
            c = (0,) * (self._lo - new_lo) + self._c[: new_hi - self._lo]
        return QSeries(new_lo, new_hi, c)

    def normalize_lo(self) -> "QSeries":
        """Raise lo to the first nonzero stored coefficient."""
        for i, c in enumerate(self._c):
            if c:
                return self.restrict(lo=self._lo + i) if i else self
        return self.restrict(lo=self._hi - 1)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        lo = min(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if hi <= lo:
            raise EmptyWindow(f"sum window [{lo}, {hi}) is empty")
        c = [self.coeff(e) + other.coeff(e) for e in range(lo, hi)]
        return QSeries(lo, hi, c)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QSeries(self._lo, self._hi, [-c for c in self._c])

    def scale(self, factor: Coeff) -> "QSeries":
        factor = _canon(factor)
        if factor == 0:
            return QSeries.zero(self._lo, self._hi)
        if factor == 1:
            return self
        return QSeries(self._lo, self._hi, [factor * c for c in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        # Window rule: every contribution to q^e with e below both
        # f.hi + g.lo and g.hi + f.lo is known.
        lo = self._lo + other._lo
        hi = min(self._hi + other._lo, other._hi + self._lo)
        if hi <= lo:
            raise EmptyWindow(f"product window [{lo}, {hi}) is empty")
        full = _convolve(list(self._c), list(other._c))
        return QSeries(lo, hi, full[: hi - lo])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            raise TypeError("series powers must be integers")
        if n == 0:
            return QSeries.one(self.width)
        base = self.invert() if n < 0 else self
        e = abs(n)
        acc = None
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def invert(self) -> "QSeries":
        """Inverse series on [-lo, hi - 2*lo); leading coefficient must be nonzero."""
        if self._c[0] == 0:
            raise NotInvertible("leading coefficient is zero")
        inv = _inv_list(list(self._c), self.width)
        return QSeries(-self._lo, self._hi - 2 * self._lo, inv)

    def shift(self, t: int) -> "QSeries":
        """Multiply by q^t: translate the window by t."""
        if t == 0:
            return self
        return QSeries(self._lo + t, self._hi + t, self._c)

    # -- comparison ----------------------------------------------------------

    def equal_on_overlap(self, other: "QSeries") -> bool:
        """Exact coefficientwise equality on the overlap window."""
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if hi <= lo:
            raise EmptyWindow("windows do not overlap")
        return all(self.coeff(e) == other.coeff(e) for e in range(lo, hi))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi and self._c == other._c

    def __hash__(self):
        return hash((self._lo, self._hi, self._c))

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> dict:
        """{"lo", "hi", "coeffs": [[e, "num" or "num/den"], ...]}, zeros omitted."""
        return {
            "lo": self._lo,
            "hi": self._hi,
            "coeffs": [[e, str(c)] for e, c in self.terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QSeries":
        lo, hi = obj["lo"], obj["hi"]
        c = [0] * (hi - lo)
        for e, s in obj["coeffs"]:
            c[e - lo] = Fraction(s) if "/" in s else int(s)
        return cls(lo, hi, c)

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"QSeries(lo={self._lo}, hi={self._hi}, {str(self)!r})"

    def __str__(self):
        parts = []
        for e, c in self.terms():
            sign = "-" if (c < 0) else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        if not parts:
            text = "0"
        else:
            first_sign, first_body = parts[0]
            text = ("-" if first_sign == "-" else "") + first_body
            for sign, body in parts[1:]:
                text += f" {sign} {body}"
        return f"{text} + O(q^{self._hi})"
