"""Canonical bases phi_n and F_m by leading-term elimination against L.

For a catalogued pair (k, N):

* phi_n (n >= 2) has weight 2-k, shape q^-n + A_n(-1) q^-1 + A_n(0) + ...,
  built from phi_2 by multiplying with the hauptmodul L and cancelling the
  intermediate pole orders against previously built phi_j.
* F_m (m >= -1) has weight k, shape -q^-m + sum_{n>=2} C_m(n) q^n, built the
  same way starting from F_-1 = -g.

All pivots are monic (leading coefficient +-1), so elimination multipliers
stay integers and every constructed element is integral; both facts are
asserted rather than assumed.  Zagier duality C_m(n) = A_n(m) and the
residue pairing (constant term of F_m * phi_n vanishes) are exposed as
residual tables.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import IntegralityViolation, PrecisionExhausted
from .forms import catalog_entry, catalog_form
from .qseries import QSeries

_SLACK = 8  # extra coefficients requested beyond the exact bottom-up need


@dataclass(frozen=True)
class BasisElement:
    family: str  # "phi" or "F"
    index: int
    k: int
    level: int
    series: QSeries
    elimination_coeffs: tuple  # ((index, multiplier), ...) of elements added
    integral: bool

    @property
    def pair(self):
        return (self.k, self.level)

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "index": self.index,
            "k": self.k,
            "N": self.level,
            "elimination": [[i, str(c)] for i, c in self.elimination_coeffs],
            "integral": self.integral,
            "series": self.series.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BasisElement":
        from fractions import Fraction

        elim = tuple(
            (i, Fraction(s) if "/" in s else int(s)) for i, s in obj["elimination"]
        )
        return cls(
            obj["family"], obj["index"], obj["k"], obj["N"],
            QSeries.from_json_obj(obj["series"]), elim, obj["integral"],
        )


class BasisCache:
    """Per-element cache, in memory and optionally on disk.

    Keyed by (k, N, family, index); always keeps the widest series seen.
    Disk layout: root/N{N}_k{k}/{family}{index}.json, written atomically.
    """

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root) if root is not None else None
        self._mem: dict = {}

    def _path(self, k, level, family, index) -> Path:
        return self.root / f"N{level}_k{k}" / f"{family}{index}.json"

    def get(self, k, level, family, index) -> BasisElement | None:
        key = (k, level, family, index)
        elem = self._mem.get(key)
        if elem is None and self.root is not None:
            path = self._path(k, level, family, index)
            if path.exists():
                elem = BasisElement.from_json_obj(json.loads(path.read_text()))
                self._mem[key] = elem
        return elem

    def put(self, elem: BasisElement) -> None:
        key = (elem.k, elem.level, elem.family, elem.index)
        cur = self._mem.get(key)
        if cur is not None and cur.series.hi >= elem.series.hi:
            return
        self._mem[key] = elem
        if self.root is not None:
            path = self._path(elem.k, elem.level, elem.family, elem.index)
            path.parent.mkdir(parents=True, exist_ok=True)
            payload = json.dumps(elem.to_json_obj())
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            try:
                with os.fdopen(fd, "w") as fh:
                    fh.write(payload)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise


_DEFAULT_CACHE = BasisCache()


def default_cache() -> BasisCache:
    return _DEFAULT_CACHE


def _resolve_cache(cache) -> BasisCache:
    return _DEFAULT_CACHE if cache is None else cache


def build_phi(k: int, level: int, n: int, prec: int, cache: BasisCache | None = None) -> BasisElement:
    """phi_n on the window [-n, prec); prec is the exclusive upper exponent bound."""
    catalog_entry(k, level)
    if n < 2:
        raise ValueError("phi indices start at 2")
    if prec < 0:
        raise PrecisionExhausted("phi shape needs the window to reach exponent -1")
    cache = _resolve_cache(cache)
    hit = cache.get(k, level, "phi", n)
    if hit is not None and hit.series.hi >= prec:
        return hit

    target = {j: prec + (n - j) + _SLACK for j in range(2, n + 1)}
    width_l = prec + n + _SLACK + 2
    ell = catalog_form(k, level, "L", width_l)

    phi2 = catalog_form(k, level, "phi2", target[2] + 2)
    elems = {2: BasisElement("phi", 2, k, level, phi2, (), phi2.is_integral())}
    cache.put(elems[2])
    for j in range(3, n + 1):
        t = elems[j - 1].series * ell
        used = []
        for i in range(j - 1, 1, -1):
            c = t.coeff(-i)
            if c:
                t = t + elems[i].series.scale(-c)
                used.append((i, -c))
        elem = _certify_phi(k, level, j, t, tuple(used))
        elems[j] = elem
        cache.put(elem)
    if elems[n].series.hi < prec:
        raise PrecisionExhausted(f"phi_{n} for ({k},{level}) only reached hi={elems[n].series.hi}")
    return elems[n]


def build_f(k: int, level: int, m: int, prec: int, cache: BasisCache | None = None) -> BasisElement:
    """F_m on the window [-m, prec); prec is the exclusive upper exponent bound."""
    catalog_entry(k, level)
    if m < -1:
        raise ValueError("F indices start at -1")
    if prec < 2:
        raise PrecisionExhausted("F shape needs the window to reach exponent 1")
    cache = _resolve_cache(cache)
    hit = cache.get(k, level, "F", m)
    if hit is not None and hit.series.hi >= prec:
        return hit

    target = {j: prec + (m - j) + _SLACK for j in range(-1, m + 1)}
    width_l = prec + max(m, 0) + _SLACK + 2
    ell = catalog_form(k, level, "L", width_l)

    g = catalog_form(k, level, "g", target[-1] - 1)
    fm1 = BasisElement("F", -1, k, level, -g, (), g.is_integral())
    elems = {-1: fm1}
    cache.put(fm1)
    for j in range(0, m + 1):
        t = elems[j - 1].series * ell
        used = []
        for i in range(j - 1, -2, -1):
            c = t.coeff(-i)
            if c:
                t = t + elems[i].series.scale(c)
                used.append((i, c))
        elem = _certify_f(k, level, j, t, tuple(used))
        elems[j] = elem
        cache.put(elem)
    if elems[m].series.hi < prec:
        raise PrecisionExhausted(f"F_{m} for ({k},{level}) only reached hi={elems[m].series.hi}")
    return elems[m]


def _certify_phi(k, level, n, t: QSeries, used) -> BasisElement:
    if t.hi < -1:
        raise PrecisionExhausted(f"phi_{n} for ({k},{level}): window ends at {t.hi}")
    if t.lo != -n or t.coeff(-n) != 1:
        raise PrecisionExhausted(f"phi_{n} for ({k},{level}): leading term is not q^-{n}")
    for e in range(-n + 1, min(-1, t.hi)):
        if t.coeff(e) != 0:
            raise PrecisionExhausted(f"phi_{n} for ({k},{level}): residue at q^{e}")
    if not t.is_integral():
        raise IntegralityViolation(f"phi_{n} for ({k},{level}) has rational coefficients")
    return BasisElement("phi", n, k, level, t, used, True)


def _certify_f(k, level, m, t: QSeries, used) -> BasisElement:
    if t.hi < 2:
        raise PrecisionExhausted(f"F_{m} for ({k},{level}): window ends at {t.hi}")
    if t.lo != -m or t.coeff(-m) != -1:
        raise PrecisionExhausted(f"F_{m} for ({k},{level}): leading term is not -q^-{m}")
    for e in range(-m + 1, 2):
        if t.coeff(e) != 0:
            raise PrecisionExhausted(f"F_{m} for ({k},{level}): residue at q^{e}")
    if not t.is_integral():
        raise IntegralityViolation(f"F_{m} for ({k},{level}) has rational coefficients")
    return BasisElement("F", m, k, level, t, used, True)


def duality_residuals(k: int, level: int, nmax: int, mmax: int,
                      cache: BasisCache | None = None) -> dict:
    """C_m(n) - A_n(m) for 2 <= n <= nmax, -1 <= m <= mmax (all zeros expected)."""
    cache = _resolve_cache(cache)
    phis = {n: build_phi(k, level, n, mmax + 2, cache) for n in range(2, nmax + 1)}
    fs = {m: build_f(k, level, m, nmax + 2, cache) for m in range(-1, mmax + 1)}
    out = {}
    for n in range(2, nmax + 1):
        for m in range(-1, mmax + 1):
            out[(n, m)] = fs[m].series.coeff(n) - phis[n].series.coeff(m)
    return out


def residue_pairing(k: int, level: int, nmax: int, mmax: int,
                    cache: BasisCache | None = None) -> dict:
    """Constant term of F_m * phi_n (independent route to the duality residual).

    The product is a weight-2 form on a genus-zero curve, holomorphic away
    from infinity, so its q^0 coefficient must vanish; by the window algebra
    that coefficient equals C_m(n) - A_n(m).
    """
    cache = _resolve_cache(cache)
    phis = {n: build_phi(k, level, n, mmax + 2, cache) for n in range(2, nmax + 1)}
    fs = {m: build_f(k, level, m, nmax + 2, cache) for m in range(-1, mmax + 1)}
    out = {}
    for n in range(2, nmax + 1):
        for m in range(-1, mmax + 1):
            out[(n, m)] = (fs[m].series * phis[n].series).coeff(0)
    return out
