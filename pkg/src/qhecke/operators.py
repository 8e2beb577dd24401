"""The U, V, theta-power and Hecke operators on q-series.

Each operator carries an explicit precision rule so that windows stay sound:
no coefficient inside an output window can change when the input is supplied
to higher precision.
"""

from __future__ import annotations

from .errors import EmptyWindow, NotPrime
from .qseries import QSeries, _ceil_div


def apply_u(f: QSeries, m: int) -> QSeries:
    """U(m): the coefficient of q^n in the result is the coefficient of q^(mn) in f.

    Window rule: [ceil(lo/m), ceil(hi/m)).
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return f
    lo = _ceil_div(f.lo, m)
    hi = _ceil_div(f.hi, m)
    if hi <= lo:
        raise EmptyWindow(f"U({m}) of window [{f.lo}, {f.hi}) has no coefficients")
    return QSeries(lo, hi, [f.coeff(m * n) for n in range(lo, hi)])


def apply_v(f: QSeries, m: int) -> QSeries:
    """V(m): q^n maps to q^(mn); non-multiples of m are exactly zero.

    Window rule: [m*lo, m*(hi-1)+1).
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return f
    lo = m * f.lo
    hi = m * (f.hi - 1) + 1
    c = [0] * (hi - lo)
    for e, v in f.terms():
        c[m * e - lo] = v
    return QSeries(lo, hi, c)


def _apply_v_capped(f: QSeries, m: int, hi_cap: int) -> QSeries:
    """V(m) materialized only up to hi_cap (trailing non-multiples count as known)."""
    hi = min(m * (f.hi - 1) + 1, hi_cap)
    return apply_v(f, m) if m == 1 else QSeries(
        m * f.lo, hi,
        _v_dense(f, m, hi),
    )


def _v_dense(f: QSeries, m: int, hi: int) -> list:
    lo = m * f.lo
    c = [0] * (hi - lo)
    for e, v in f.terms():
        if m * e < hi:
            c[m * e - lo] = v
    return c


def theta_power(f: QSeries, j: int) -> QSeries:
    """(q d/dq)^j: multiply the coefficient at exponent e by e^j; window unchanged."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return f
    lo = f.lo
    return QSeries(lo, f.hi, [(lo + i) ** j * c for i, c in enumerate(f.coefficients)])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def hecke_tpn(f: QSeries, k: int, p: int, n: int) -> QSeries:
    """The Hecke operator T_k(p^n) as the sum of p^((k-1)j) U(p^(n-j)) V(p^j).

    The result window is the intersection of the n+1 summands' windows, so a
    caller needing hi >= P must supply f with hi >= p^n * P (up to rounding).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return f
    # Determine the joint window first so the dilated terms are never
    # materialized beyond it.
    lo = min(p ** j * _ceil_div(f.lo, p ** (n - j)) for j in range(n + 1))
    hi = min(p ** j * (_ceil_div(f.hi, p ** (n - j)) - 1) + 1 for j in range(n + 1))
    if hi <= lo:
        raise EmptyWindow(f"T_{k}(p^{n}) window is empty for input [{f.lo}, {f.hi})")
    total = QSeries.zero(lo, hi)
    for j in range(n + 1):
        term = apply_u(f, p ** (n - j))
        if j:
            if p ** j * term.lo >= hi:
                continue  # the dilated term is zero on the joint window
            term = _apply_v_capped(term, p ** j, hi)
        total = total + term.scale(p ** ((k - 1) * j))
    return total.restrict(lo=lo, hi=hi)
