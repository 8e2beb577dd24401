"""p-adic valuation machinery and the verification harness.

Implements the alpha/beta/gamma recurrence table for iterated U(p), the
integer binomial form of beta_m, and the checks tying everything together:

* the expansion identity
    F | U(p^m) = sum_i beta_{m-1-i} Theta^{k-1}(phi_p) | U(p^i)
                 + beta_m F + gamma_m F | V(p),
* the Hecke decomposition  F | T_k(p^n) = p^((k-1)n) F_{p^n} + C(p^n) g,
* the coefficient formula
    C(p^m) = sum_i beta_i p^((k-1)(m-i-1)) A_p(p^(m-i-1)),
* and the valuation identities  v_p(C(p^m)) = v_p(C(p))  and
    v_p(F | T_k(p^m) / C(p^m) - g) = (k-1)m - v_p(C(p))
  for primes p with p not dividing N or a(p) and v_p(C(p)) <= k-1.

Valuations of truncated series are certified on a finite scanned window: a
witness coefficient gives the exact minimum provided no scanned coefficient
goes below it, and both numbers are always reported together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .basis import BasisCache, _resolve_cache, build_f, build_phi
from .errors import IndexOutOfRange, NotPrime, PrecisionExhausted
from .forms import catalog_entry, catalog_form
from .operators import apply_u, apply_v, hecke_tpn, is_prime, theta_power
from .qseries import QSeries, _canon

INF = float("inf")  # valuation of zero; orders above every integer

_SLACK = 8


def vp_int(p: int, n: int) -> int | float:
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rat(p: int, x) -> int | float:
    """p-adic valuation of an exact rational; +infinity for zero."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if x == 0:
        return INF
    if isinstance(x, int):
        return vp_int(p, x)
    if isinstance(x, Fraction):
        return vp_int(p, x.numerator) - vp_int(p, x.denominator)
    raise TypeError(f"exact value required, got {type(x).__name__}")


@dataclass(frozen=True)
class SeriesValuation:
    valuation: int | float
    witness_exponent: int | None
    scanned: int

    def to_json_obj(self) -> dict:
        v = "inf" if self.valuation == INF else self.valuation
        return {"valuation": v, "witness": self.witness_exponent, "scanned": self.scanned}


def vp_series(p: int, f: QSeries) -> SeriesValuation:
    """Minimum valuation over the stored window, with the first witness.

    This is exact whenever a finite witness exists; otherwise it is the
    +infinity upper-bound certificate for the scanned window only.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    best: int | float = INF
    witness = None
    for e, c in f.terms():
        v = vp_rat(p, c)
        if v < best:
            best = v
            witness = e
    return SeriesValuation(best, witness, f.width)


# ---------------------------------------------------------------------------
# The recurrence table


@dataclass(frozen=True)
class BetaTable:
    """beta_0..beta_M and gamma_1..gamma_M for beta_{m+1} = a beta_m - p^(k-1) beta_{m-1}."""

    a: int
    p: int
    k: int
    beta: tuple
    gamma: tuple  # gamma[i] is gamma_{i+1}

    def beta_at(self, m: int) -> int:
        return self.beta[m]

    def gamma_at(self, m: int) -> int:
        if m < 1:
            raise IndexOutOfRange("gamma starts at index 1")
        return self.gamma[m - 1]

    def alpha_at(self, i: int, m: int) -> int:
        """alpha_{i,m} = beta_{m-1-i} for 0 <= i <= m-1."""
        if not 0 <= i <= m - 1:
            raise IndexOutOfRange(f"alpha index i={i} outside 0..{m - 1}")
        return self.beta[m - 1 - i]


def beta_recurrence(a: int, p: int, k: int, M: int) -> BetaTable:
    if M < 0:
        raise ValueError("M must be nonnegative")
    beta = [1, a][: M + 1]
    while len(beta) < M + 1:
        beta.append(a * beta[-1] - p ** (k - 1) * beta[-2])
    gamma = [-(p ** (k - 1)) * beta[m - 1] for m in range(1, M + 1)]
    return BetaTable(a, p, k, tuple(beta), tuple(gamma))


def c_coeff(a: int, m: int, j: int):
    """c_{m,j} = (-4)^j a^(m-2j) / 2^m * sum_{i=j}^{floor(m/2)} C(m+1, 2i+1) C(i, j).

    Integer-valued for integer a, despite the 2^m denominator.
    """
    if m < 0 or j < 0 or j > m // 2:
        raise IndexOutOfRange(f"need 0 <= j <= floor(m/2), got m={m}, j={j}")
    s = sum(comb(m + 1, 2 * i + 1) * comb(i, j) for i in range(j, m // 2 + 1))
    return _canon(Fraction((-4) ** j * a ** (m - 2 * j) * s, 2 ** m))


def beta_binomial(a: int, p: int, k: int, m: int):
    """beta_m reassembled from the binomial coefficients c_{m,j}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum(c_coeff(a, m, j) * p ** ((k - 1) * j) for j in range(m // 2 + 1))


# ---------------------------------------------------------------------------
# Shared plumbing for the verification routines


def _require_coprime(level: int, p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if level % p == 0:
        raise ValueError(f"p={p} divides the level {level}")


def _a_p(k: int, level: int, p: int) -> int:
    return catalog_form(k, level, "g", p + 1).coeff(p)


def _f_series(k, level, hi, cache) -> QSeries:
    return build_f(k, level, 1, hi, cache).series


def verify_expansion_identity(k: int, level: int, p: int, m: int, prec: int = 50,
                              a_override: int | None = None,
                              cache: BasisCache | None = None) -> QSeries:
    """Residual of the iterated-U expansion of F | U(p^m); zero when it holds.

    prec is the total number of residual coefficients; the residual window is
    [-p, prec - p).  a_override substitutes a wrong eigenvalue so negative
    controls can demonstrate the identity actually constrains a(p).
    """
    catalog_entry(k, level)
    _require_coprime(level, p)
    if m < 1:
        raise ValueError("m must be at least 1")
    if prec <= p + 1:
        raise PrecisionExhausted(f"need a residual window wider than {p + 1}")
    cache = _resolve_cache(cache)
    hi_res = prec - p

    a = _a_p(k, level, p) if a_override is None else a_override
    table = beta_recurrence(a, p, k, m)

    f = _f_series(k, level, p ** m * (hi_res - 1) + 1 + _SLACK, cache)
    phi_p = build_phi(k, level, p, p ** (m - 1) * (hi_res - 1) + 1 + _SLACK, cache).series
    theta_phi = theta_power(phi_p, k - 1)

    lhs = apply_u(f, p ** m)
    rhs = QSeries.zero(-p, hi_res)
    for i in range(m):
        rhs = rhs + apply_u(theta_phi, p ** i).scale(table.alpha_at(i, m))
    rhs = rhs + f.scale(table.beta_at(m))
    rhs = rhs + apply_v(f.restrict(hi=hi_res + 2), p).scale(table.gamma_at(m))
    residual = lhs - rhs
    return residual.restrict(lo=-p, hi=hi_res)


def verify_hecke_decomposition(k: int, level: int, p: int, n: int, prec: int = 100,
                               cache: BasisCache | None = None) -> QSeries:
    """Residual of F | T_k(p^n) - p^((k-1)n) F_{p^n} - C(p^n) g; zero when it holds.

    prec counts residual coefficients; the window is [-p^n, prec - p^n).
    """
    catalog_entry(k, level)
    _require_coprime(level, p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    cache = _resolve_cache(cache)
    q = p ** n
    if prec <= q + 1:
        raise PrecisionExhausted(f"need a residual window wider than {q + 1}")
    hi_res = prec - q

    f = _f_series(k, level, max(q * (hi_res - 1) + 1, q + 1) + _SLACK, cache)
    lhs = hecke_tpn(f, k, p, n)
    c_pn = f.coeff(q)  # zero for n = 0 by the F_1 shape
    f_pn = build_f(k, level, q, hi_res + _SLACK, cache).series
    g = catalog_form(k, level, "g", hi_res + _SLACK)
    residual = lhs - f_pn.scale(p ** ((k - 1) * n)) - g.scale(c_pn)
    return residual.restrict(lo=-q, hi=hi_res)


def verify_coefficient_formula(k: int, level: int, p: int, m: int,
                               cache: BasisCache | None = None):
    """C(p^m) minus sum_i beta_i p^((k-1)(m-i-1)) A_p(p^(m-i-1)); zero expected."""
    catalog_entry(k, level)
    _require_coprime(level, p)
    if m < 1:
        raise ValueError("m must be at least 1")
    cache = _resolve_cache(cache)
    a = _a_p(k, level, p)
    table = beta_recurrence(a, p, k, m)
    f = _f_series(k, level, p ** m + 2, cache)
    phi_p = build_phi(k, level, p, p ** (m - 1) + 2, cache).series
    total = 0
    for i in range(m):
        total += table.beta_at(i) * p ** ((k - 1) * (m - i - 1)) * phi_p.coeff(p ** (m - i - 1))
    return f.coeff(p ** m) - total


# ---------------------------------------------------------------------------
# The valuation report


@dataclass(frozen=True)
class DiffValuation:
    m: int
    valuation: int | float
    witness_exponent: int | None
    scanned: int
    predicted: int
    matches: bool

    def to_json_obj(self) -> dict:
        v = "inf" if self.valuation == INF else self.valuation
        return {
            "m": self.m,
            "valuation": v,
            "witness": self.witness_exponent,
            "scanned": self.scanned,
            "predicted": self.predicted,
            "matches": self.matches,
        }


@dataclass(frozen=True)
class ValuationReport:
    k: int
    level: int
    p: int
    a_p: int
    qualifies: dict
    vp_c_p: int | float
    vp_c: tuple  # v_p(C(p^m)) for m = 1..Mmax
    vp_c_constant: bool
    diff: tuple  # DiffValuation per m
    window_used: int

    @property
    def qualified(self) -> bool:
        return all(self.qualifies.values())

    @property
    def passes(self) -> bool:
        """True when qualified and every measured valuation equals its prediction."""
        return self.qualified and self.vp_c_constant and all(d.matches for d in self.diff)

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "N": self.level,
            "p": self.p,
            "a_p": self.a_p,
            "qualifies": dict(self.qualifies),
            "vpC": ["inf" if v == INF else v for v in self.vp_c],
            "vpC_constant": self.vp_c_constant,
            "diff": [d.to_json_obj() for d in self.diff],
            "window": self.window_used,
            "qualified": self.qualified,
            "passes": self.passes,
        }


def verify_valuations(k: int, level: int, p: int, mmax: int = 3, min_scan: int = 50,
                      cache: BasisCache | None = None) -> ValuationReport:
    """Measure v_p(C(p^m)) and the difference-series valuation for m = 1..mmax.

    Disqualified primes still produce a report (with the failing hypothesis
    flagged) so scans can tabulate behavior everywhere.  The predictions are
    only asserted through `passes` when all hypotheses hold.
    """
    catalog_entry(k, level)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if mmax < 1:
        raise ValueError("mmax must be at least 1")
    cache = _resolve_cache(cache)

    coprime = level % p != 0
    a = catalog_form(k, level, "g", p + 1).coeff(p)
    f = _f_series(k, level, p ** mmax + 2, cache)
    vp_c_list = [vp_rat(p, f.coeff(p ** m)) for m in range(1, mmax + 1)]
    vp_c_p = vp_c_list[0]
    qualifies = {
        "p_coprime_to_N": coprime,
        "p_coprime_to_a_p": a % p != 0,
        "vp_C_p_at_most_k_minus_1": vp_c_p <= k - 1,
    }

    diffs = []
    scanned_max = 0
    if coprime:
        for m in range(1, mmax + 1):
            q = p ** m
            hi_diff = max(2, min_scan - q)
            f_big = _f_series(k, level, q * (hi_diff - 1) + 1 + _SLACK, cache)
            transformed = hecke_tpn(f_big, k, p, m)
            c_pm = f.coeff(q)
            if c_pm == 0:
                raise PrecisionExhausted(f"C(p^{m}) vanishes; cannot normalize")
            g = catalog_form(k, level, "g", hi_diff + _SLACK)
            diff = transformed.scale(Fraction(1, c_pm)) - g
            diff = diff.restrict(lo=-q, hi=hi_diff)
            sv = vp_series(p, diff)
            predicted = (k - 1) * m - (vp_c_p if vp_c_p != INF else 0)
            diffs.append(DiffValuation(
                m, sv.valuation, sv.witness_exponent, sv.scanned,
                predicted, sv.valuation == predicted,
            ))
            scanned_max = max(scanned_max, sv.scanned)

    return ValuationReport(
        k, level, p, a, qualifies, vp_c_p, tuple(vp_c_list),
        all(v == vp_c_p for v in vp_c_list), tuple(diffs), scanned_max,
    )


def scan_qualifying_primes(k: int, level: int, pmax: int,
                           cache: BasisCache | None = None) -> list:
    """Hypothesis flags and v_p(C(p)) for every prime p <= pmax coprime to N."""
    catalog_entry(k, level)
    cache = _resolve_cache(cache)
    primes = [p for p in range(2, pmax + 1) if is_prime(p) and level % p]
    if not primes:
        return []
    g = catalog_form(k, level, "g", pmax + 1)
    f = _f_series(k, level, pmax + 2, cache)
    rows = []
    for p in primes:
        a = g.coeff(p)
        vcp = vp_rat(p, f.coeff(p))
        rows.append({
            "p": p,
            "a_p": a,
            "p_coprime_to_a_p": a % p != 0,
            "vp_C_p": vcp,
            "vp_C_p_at_most_k_minus_1": vcp <= k - 1,
            "qualifies": a % p != 0 and vcp <= k - 1,
        })
    return rows


def smallest_qualifying_prime(k: int, level: int, pmax: int = 100,
                              cache: BasisCache | None = None) -> int:
    for row in scan_qualifying_primes(k, level, pmax, cache):
        if row["qualifies"]:
            return row["p"]
    raise PrecisionExhausted(f"no qualifying prime up to {pmax} for ({k},{level})")
