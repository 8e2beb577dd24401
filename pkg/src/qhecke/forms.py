"""Building-block modular forms and the catalog of one-dimensional spaces.

Covers Dedekind eta-quotient expansion (Euler's pentagonal series raised to
powers), the normalized Eisenstein series E2/E4/E6 with dilations, Delta and
Klein's j, the eta-quotient modularity and cusp-order checkers, and the
catalog of the 16 non-CM pairs (k, N) of even weight k >= 4 whose cusp form
space is one-dimensional on a genus-zero X_0(N).

Each catalog entry carries closed-form recipes for the normalized cusp form
g, the hauptmodul L with a simple pole at infinity, and the weight 2-k form
phi2 = q^-2 + O(q^-1), together with reference expansion prefixes that every
recipe is validated against on first use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    NonIntegralValuation,
    NotADivisor,
    PrecisionExhausted,
    PrefixMismatch,
    UnknownPair,
)
from .qseries import QSeries, _canon


# ---------------------------------------------------------------------------
# Eta quotients


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product of eta(delta*z)^{r_delta} over divisors delta of level."""

    level: int
    exponents: tuple  # sorted ((delta, r), ...) with r != 0

    def __init__(self, level: int, exponents):
        items = tuple(sorted(dict(exponents).items()))
        if level < 1:
            raise ValueError("level must be positive")
        for delta, r in items:
            if delta < 1 or level % delta:
                raise ValueError(f"{delta} does not divide level {level}")
            if r == 0:
                raise ValueError("exponents must be nonzero")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "exponents", items)

    def shift24(self) -> int:
        """Sum of delta * r_delta, 24 times the leading q-power."""
        return sum(d * r for d, r in self.exponents)

    def render(self) -> str:
        body = " ".join(f"{d}^{r}" if r != 1 else str(d) for d, r in self.exponents)
        return f"eta({body}; N={self.level})"


class _GrowCache:
    """Memoize the widest expansion per key; narrower requests restrict it."""

    def __init__(self):
        self._best = {}

    def get(self, key, width: int, build) -> QSeries:
        cur = self._best.get(key)
        if cur is None or cur.width < width:
            cur = build(width)
            self._best[key] = cur
        if cur.width == width:
            return cur
        return cur.restrict(hi=cur.lo + width)


_euler_cache = _GrowCache()
_eta_cache = _GrowCache()
_named_cache = _GrowCache()
_catalog_cache = _GrowCache()


def _euler_product(dilation: int, prec: int) -> QSeries:
    """prod_{n>=1} (1 - q^(dilation*n)) on [0, prec), by the pentagonal series."""

    def build(width: int) -> QSeries:
        c = [0] * width
        c[0] = 1
        k = 1
        while True:
            e1 = dilation * (k * (3 * k - 1) // 2)
            e2 = dilation * (k * (3 * k + 1) // 2)
            if e1 >= width and e2 >= width:
                break
            s = -1 if k & 1 else 1
            if e1 < width:
                c[e1] = s
            if e2 < width:
                c[e2] = s
            k += 1
        return QSeries(0, width, c)

    return _euler_cache.get(dilation, prec, build)


def eta_product_expand(spec: EtaQuotientSpec, prec: int) -> QSeries:
    """Expansion of the eta quotient on a window of prec coefficients from lo.

    The aggregate prefactor q^(shift24/24) must be an integral power.
    """
    s24 = spec.shift24()
    if s24 % 24:
        raise NonIntegralValuation(
            f"sum of delta*r is {s24}, not divisible by 24"
        )
    if prec < 1:
        raise ValueError("prec must be positive")

    def build(width: int) -> QSeries:
        acc = None
        for delta, r in spec.exponents:
            factor = _euler_product(delta, width) ** r
            acc = factor if acc is None else acc * factor
        return acc.shift(s24 // 24)

    return _eta_cache.get(spec, prec, build)


def eta_modularity_check(spec: EtaQuotientSpec):
    """Weight, the two mod-24 congruences, and the character's square class."""
    rsum = sum(r for _, r in spec.exponents)
    weight = _canon(Fraction(rsum, 2))
    n = spec.level
    cond_delta = spec.shift24() % 24 == 0
    cond_ndelta = sum((n // d) * r for d, r in spec.exponents) % 24 == 0
    s = Fraction(1)
    for d, r in spec.exponents:
        s *= Fraction(d) ** r
    x = s.numerator * s.denominator
    if isinstance(weight, int) and weight % 2:
        x = -x
    return EtaModularity(weight, cond_delta, cond_ndelta, _squarefree_part(x))


@dataclass(frozen=True)
class EtaModularity:
    weight: int | Fraction
    cond24_delta: bool
    cond24_Ndelta: bool
    character_square_class: int

    @property
    def trivial_character(self) -> bool:
        return self.character_square_class == 1


def _squarefree_part(x: int) -> int:
    if x == 0:
        return 0
    sign = -1 if x < 0 else 1
    x = abs(x)
    out = sign
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            if e & 1:
                out *= p
        p += 1 if p == 2 else 2
    return out * x


def eta_cusp_order(spec: EtaQuotientSpec, d: int) -> int | Fraction:
    """Order of vanishing at the cusp with denominator d of Gamma_0(level)."""
    n = spec.level
    if d < 1 or n % d:
        raise NotADivisor(f"{d} does not divide {n}")
    total = Fraction(0)
    for delta, r in spec.exponents:
        total += Fraction(gcd(d, delta) ** 2 * r, gcd(d, n // d) * d * delta)
    return _canon(Fraction(n, 24) * total)


# ---------------------------------------------------------------------------
# Eisenstein series, Delta, j

_EIS_SCALE = {2: -24, 4: 240, 6: -504}

_sigma_cache: dict[int, list] = {}


def _sigma_list(power: int, nmax: int) -> list:
    """sigma_power(n) for 0 <= n <= nmax (index 0 unused), by divisor sieve."""
    cur = _sigma_cache.get(power)
    if cur is None or len(cur) <= nmax:
        s = [0] * (nmax + 1)
        for d in range(1, nmax + 1):
            dp = d ** power
            for m in range(d, nmax + 1, d):
                s[m] += dp
        _sigma_cache[power] = cur = s
    return cur


def eisenstein_series(weight: int, dilation: int = 1, prec: int = 64) -> QSeries:
    """Normalized Eisenstein series of weight 2, 4 or 6 in the variable q^dilation.

    Window is [0, prec).
    """
    if weight not in _EIS_SCALE:
        raise ValueError("weight must be 2, 4 or 6")
    if dilation < 1:
        raise ValueError("dilation must be positive")
    if prec < 1:
        raise ValueError("prec must be positive")

    def build(width: int) -> QSeries:
        scale = _EIS_SCALE[weight]
        nmax = (width - 1) // dilation
        sig = _sigma_list(weight - 1, nmax)
        c = [0] * width
        c[0] = 1
        for n in range(1, nmax + 1):
            c[dilation * n] = scale * sig[n]
        return QSeries(0, width, c)

    return _named_cache.get(("eis", weight, dilation), prec, build)


def named_form(name: str, prec: int) -> QSeries:
    """Delta = (E4^3 - E6^2)/1728 on [1, 1+prec), or j = E4^3/Delta on [-1, -1+prec)."""
    if prec < 1:
        raise ValueError("prec must be positive")
    if name == "delta":

        def build(width: int) -> QSeries:
            e4 = eisenstein_series(4, 1, width + 1)
            e6 = eisenstein_series(6, 1, width + 1)
            num = e4 ** 3 - e6 ** 2
            return num.scale(Fraction(1, 1728)).restrict(lo=1)

        return _named_cache.get("delta", prec, build)
    if name == "j":

        def build(width: int) -> QSeries:
            e4 = eisenstein_series(4, 1, width + 1)
            delta = named_form("delta", width)
            return (e4 ** 3) * delta.invert()

        return _named_cache.get("j", prec, build)
    raise ValueError(f"unknown form name {name!r}")


# ---------------------------------------------------------------------------
# Recipe expression trees


@dataclass(frozen=True)
class Eta:
    spec: EtaQuotientSpec

    def expand(self, width, g_expand=None):
        return eta_product_expand(self.spec, width)

    def render(self):
        return self.spec.render()


@dataclass(frozen=True)
class Eis:
    weight: int
    dilation: int = 1

    def expand(self, width, g_expand=None):
        return eisenstein_series(self.weight, self.dilation, width)

    def render(self):
        arg = "z" if self.dilation == 1 else f"{self.dilation}z"
        return f"E{self.weight}({arg})"


@dataclass(frozen=True)
class DeltaForm:
    def expand(self, width, g_expand=None):
        return named_form("delta", width)

    def render(self):
        return "Delta"


@dataclass(frozen=True)
class JForm:
    def expand(self, width, g_expand=None):
        return named_form("j", width)

    def render(self):
        return "j"


@dataclass(frozen=True)
class CuspSelf:
    """The catalog pair's own normalized cusp form, resolved at expansion time."""

    def expand(self, width, g_expand=None):
        if g_expand is None:
            raise ValueError("cusp-form leaf used outside a catalog entry")
        return g_expand(width)

    def render(self):
        return "g"


@dataclass(frozen=True)
class Scaled:
    factor: int | Fraction
    node: object

    def expand(self, width, g_expand=None):
        return self.node.expand(width, g_expand).scale(self.factor)

    def render(self):
        f = self.factor
        fs = f"({f})" if isinstance(f, Fraction) or f < 0 else str(f)
        return f"{fs}*{self.node.render()}"


@dataclass(frozen=True)
class Sum:
    nodes: tuple

    def __init__(self, *nodes):
        object.__setattr__(self, "nodes", tuple(nodes))

    def expand(self, width, g_expand=None):
        acc = None
        for node in self.nodes:
            term = node.expand(width, g_expand)
            acc = term if acc is None else acc + term
        return acc

    def render(self):
        return "(" + " + ".join(n.render() for n in self.nodes) + ")"


@dataclass(frozen=True)
class Prod:
    nodes: tuple

    def __init__(self, *nodes):
        object.__setattr__(self, "nodes", tuple(nodes))

    def expand(self, width, g_expand=None):
        acc = None
        for node in self.nodes:
            term = node.expand(width, g_expand)
            acc = term if acc is None else acc * term
        return acc

    def render(self):
        return "*".join(n.render() for n in self.nodes)


@dataclass(frozen=True)
class Pow:
    node: object
    exponent: int

    def expand(self, width, g_expand=None):
        return self.node.expand(width, g_expand) ** self.exponent

    def render(self):
        return f"{self.node.render()}^{self.exponent}"


@dataclass(frozen=True)
class Shifted:
    node: object
    offset: int

    def expand(self, width, g_expand=None):
        return self.node.expand(width, g_expand).shift(self.offset)

    def render(self):
        return f"q^{self.offset}*{self.node.render()}"


@dataclass(frozen=True)
class FormRecipe:
    """A closed-form expression plus the reference prefix it must reproduce."""

    node: object
    prefix_lo: int
    prefix: tuple  # dense integer coefficients from prefix_lo

    def expand(self, width: int, g_expand=None) -> QSeries:
        for pad in (8, 32, 128):
            # normalize_lo drops stored leading zeros (e.g. a factor whose
            # low-order coefficients cancel), exposing the true pole order
            out = self.node.expand(width + pad, g_expand).normalize_lo()
            if out.width >= width:
                return out.restrict(hi=out.lo + width)
        raise PrecisionExhausted(f"recipe never reached width {width}")

    def render(self) -> str:
        return self.node.render()

    def eta_leaves(self):
        """All EtaQuotientSpec leaves in the expression tree."""
        out = []

        def walk(node):
            if isinstance(node, Eta):
                out.append(node.spec)
            for attr in ("node",):
                if hasattr(node, attr):
                    walk(getattr(node, attr))
            if hasattr(node, "nodes"):
                for child in node.nodes:
                    walk(child)

        walk(self.node)
        return out


# ---------------------------------------------------------------------------
# The catalog


@dataclass(frozen=True)
class CatalogEntry:
    k: int
    level: int
    genus: int
    cm: bool
    g_recipe: FormRecipe
    L_recipe: FormRecipe
    phi2_recipe: FormRecipe
    warnings: tuple = ()

    @property
    def pair(self):
        return (self.k, self.level)

    def recipe(self, which: str) -> FormRecipe:
        try:
            return {"g": self.g_recipe, "L": self.L_recipe, "phi2": self.phi2_recipe}[which]
        except KeyError:
            raise ValueError(f"which must be g, L or phi2, got {which!r}") from None


def _recipe(node, prefix_lo, prefix) -> FormRecipe:
    return FormRecipe(node, prefix_lo, tuple(prefix))


def _eta(level, exponents) -> Eta:
    return Eta(EtaQuotientSpec(level, exponents))


def _e2_combo(p: int) -> Sum:
    """p*E2(pz) - E2(z), a holomorphic weight-2 form on Gamma_0(p)."""
    return Sum(Scaled(p, Eis(2, p)), Scaled(-1, Eis(2, 1)))


# Warning attached to (8, 2): the printed phi2 entry eta(1^80 2^-64) has
# weight 8 rather than 2-k = -6 and breaks duality against the printed
# F_0, F_1; the catalog uses the corrected form below instead.
_W82 = (
    "phi2 for (8,2) is a reconstruction: the printed quotient eta(1^80 2^-64) "
    "has weight 8, not -6, and violates duality; using "
    "eta(1^16 2^-32)*(2E2(2z)-E2(z)) instead",
)

# Reconstructed phi2 prefix for (8,2).  Not a printed value: frozen from the
# corrected recipe's expansion, and pinned by duality against the printed
# F_0 = -1 - 224q^2 + ... and F_1 = -q^-1 + 2144q^2 + ... (A_2(-1) = -a(2) = 8,
# A_2(0) = C_0(2) = -224, A_2(1) = C_1(2) = 2144).
_PHI2_82_PREFIX = (1, 8, -224, 2144)


def _build_catalog() -> dict:
    delta = DeltaForm()
    jj = JForm()
    e4 = Eis(4, 1)
    e6 = Eis(6, 1)
    dinv2 = Pow(delta, -2)
    j_prefix = _recipe(jj, -1, (1, 744, 196884))

    entries = [
        CatalogEntry(
            4, 5, 0, False,
            _recipe(_eta(5, {1: 4, 5: 4}), 1, (1, -4, 2, 8)),
            _recipe(_eta(5, {1: 6, 5: -6}), -1, (1, -6, 9, 10)),
            _recipe(Scaled(Fraction(1, 4), Prod(_eta(5, {1: 2, 5: -10}), _e2_combo(5))),
                    -2, (1, 4, 5, -16)),
        ),
        CatalogEntry(
            4, 6, 0, False,
            _recipe(_eta(6, {1: 2, 2: 2, 3: 2, 6: 2}), 1, (1, -2, -3, 4)),
            _recipe(_eta(6, {1: 5, 2: -1, 3: 1, 6: -5}), -1, (1, -5, 6)),
            _recipe(_eta(6, {1: -2, 2: 4, 3: 6, 6: -12}), -2, (1, 2, 1, -4)),
        ),
        CatalogEntry(
            4, 7, 0, False,
            _recipe(Sum(_eta(14, {1: 5, 2: -1, 7: 5, 14: -1}),
                        Scaled(4, _eta(14, {1: 2, 2: 2, 7: 2, 14: 2}))),
                    1, (1, -1, -2, -7)),
            _recipe(_eta(7, {1: 4, 7: -4}), -1, (1, -4, 2, 8)),
            _recipe(Scaled(Fraction(1, 10),
                           Prod(_eta(7, {1: 2, 7: -14}),
                                Sum(Scaled(Fraction(1, 240),
                                           Sum(Eis(4, 1), Scaled(-1, Eis(4, 7)))),
                                    Scaled(-1, CuspSelf())))),
                    -2, (1, 1)),
        ),
        CatalogEntry(
            4, 8, 0, False,
            _recipe(_eta(8, {2: 4, 4: 4}), 1, (1, 0, -4, 0, -2, 0, 24)),
            _recipe(_eta(8, {2: -4, 4: 12, 8: -8}), -1, (1, 0, 4, 0, 2)),
            _recipe(_eta(8, {4: 4, 8: -8}), -2,
                    (1, 0, 0, 0, -4, 0, 0, 0, 10, 0, 0, 0, -24)),
        ),
        CatalogEntry(
            6, 3, 0, False,
            _recipe(_eta(3, {1: 6, 3: 6}), 1, (1, -6, 9, 4)),
            _recipe(_eta(3, {1: 12, 3: -12}), -1, (1, -12, 54)),
            _recipe(Scaled(Fraction(1, 2), Prod(_eta(3, {1: 6, 3: -18}), _e2_combo(3))),
                    -2, (1, 6, -27, -68)),
        ),
        CatalogEntry(
            6, 4, 0, False,
            _recipe(_eta(4, {2: 12}), 1, (1, 0, -12, 0, 54, 0, -88)),
            _recipe(_eta(4, {1: 8, 4: -8}), -1, (1, -8, 20, 0, -62)),
            _recipe(_eta(4, {2: 8, 4: -16}), -2, (1, 0, -8, 0, 36, 0, -128)),
        ),
        CatalogEntry(
            6, 5, 0, False,
            _recipe(Scaled(Fraction(1, 4), Prod(_eta(5, {1: 4, 5: 4}), _e2_combo(5))),
                    1, (1, 2, -4, -28, 25)),
            _recipe(_eta(5, {1: 6, 5: -6}), -1, (1, -6, 9, 10)),
            _recipe(_eta(5, {1: 2, 5: -10}), -2, (1, -2, -1, 2)),
        ),
        CatalogEntry(
            8, 2, 0, False,
            _recipe(_eta(2, {1: 8, 2: 8}), 1, (1, -8, 12, 64)),
            _recipe(_eta(2, {1: 24, 2: -24}), -1, (1, -24, 276)),
            _recipe(Prod(_eta(2, {1: 16, 2: -32}), _e2_combo(2)), -2, _PHI2_82_PREFIX),
            warnings=_W82,
        ),
        CatalogEntry(
            8, 3, 0, False,
            _recipe(Sum(_eta(9, {1: 12, 3: 4}),
                        Scaled(18, _eta(9, {1: 9, 3: 4, 9: 3})),
                        Scaled(81, _eta(9, {1: 6, 3: 4, 9: 6}))),
                    1, (1, 6, -27, -92)),
            _recipe(_eta(3, {1: 12, 3: -12}), -1, (1, -12, 54)),
            _recipe(_eta(3, {1: 6, 3: -18}), -2, (1, -6)),
        ),
        CatalogEntry(
            10, 2, 0, False,
            _recipe(Sum(_eta(4, {2: 28, 4: -8}),
                        Scaled(16, _eta(4, {1: 8, 2: 4, 4: 8}))),
                    1, (1, 16, -156, 256)),
            _recipe(_eta(2, {1: 24, 2: -24}), -1, (1, -24, 276)),
            _recipe(_eta(2, {1: 16, 2: -32}), -2, (1, -16, 136)),
        ),
        CatalogEntry(
            12, 1, 0, False,
            _recipe(delta, 1, (1, -24, 252, -1472)),
            j_prefix,
            _recipe(Prod(Pow(e4, 2), e6, dinv2), -2, (1, 24, -196560)),
        ),
        CatalogEntry(
            16, 1, 0, False,
            _recipe(Prod(delta, e4), 1, (1, 216, -3348, 13888)),
            j_prefix,
            _recipe(Prod(e4, e6, dinv2), -2, (1, -216, -146880)),
        ),
        CatalogEntry(
            18, 1, 0, False,
            _recipe(Prod(delta, e6), 1, (1, -528, -4284, 147712)),
            j_prefix,
            _recipe(Prod(Pow(e4, 2), dinv2), -2, (1, 528, 86184)),
        ),
        CatalogEntry(
            20, 1, 0, False,
            _recipe(Prod(delta, Pow(e4, 2)), 1, (1, 456, 50652, -316352)),
            j_prefix,
            _recipe(Prod(e6, dinv2), -2, (1, -456, -39600)),
        ),
        CatalogEntry(
            22, 1, 0, False,
            _recipe(Prod(delta, e4, e6), 1, (1, -288, -128844, -2014208)),
            j_prefix,
            _recipe(Prod(e4, dinv2), -2, (1, 288, 14904)),
        ),
        CatalogEntry(
            26, 1, 0, False,
            _recipe(Prod(delta, Pow(e4, 2), e6), 1, (1, -48, -195804, -33552128)),
            j_prefix,
            _recipe(dinv2, -2, (1, 48, 1224)),
        ),
    ]
    return {e.pair: e for e in entries}


_CATALOG = _build_catalog()

# The printed (8,2) phi2 quotient, kept only so the CLI can flag it.
PRINTED_82_PHI2 = EtaQuotientSpec(2, {1: 80, 2: -64})

_validated: set = set()


def catalog_pairs() -> list:
    return sorted(_CATALOG)


def catalog_entry(k: int, level: int) -> CatalogEntry:
    try:
        entry = _CATALOG[(k, level)]
    except KeyError:
        raise UnknownPair(f"({k}, {level}) is not a catalogued non-CM pair of weight >= 4") from None
    _validate_entry(entry)
    return entry


def _g_expander(entry: CatalogEntry):
    def g_expand(width: int) -> QSeries:
        return entry.g_recipe.expand(width)

    return g_expand


def _validate_entry(entry: CatalogEntry) -> None:
    if entry in _validated:
        return
    g_expand = _g_expander(entry)
    for which, lead_lo in (("g", 1), ("L", -1), ("phi2", -2)):
        rec = entry.recipe(which)
        span = len(rec.prefix)
        got = rec.expand(span + 2, g_expand)
        if got.lo != rec.prefix_lo or got.coeff(rec.prefix_lo) != 1:
            raise PrefixMismatch(
                f"{which} for {entry.pair}: expected leading 1*q^{rec.prefix_lo}, "
                f"got window [{got.lo}, {got.hi})"
            )
        if rec.prefix_lo != lead_lo:
            raise PrefixMismatch(f"{which} for {entry.pair}: leading exponent must be {lead_lo}")
        for i, want in enumerate(rec.prefix):
            if want is None:
                continue
            have = got.coeff(rec.prefix_lo + i)
            if have != want:
                raise PrefixMismatch(
                    f"{which} for {entry.pair}: coefficient of q^{rec.prefix_lo + i} "
                    f"is {have}, reference says {want}"
                )
        if not got.is_integral():
            raise PrefixMismatch(f"{which} for {entry.pair}: expansion is not integral")
    _validated.add(entry)


def catalog_form(k: int, level: int, which: str, prec: int) -> QSeries:
    """Expansion of g, L or phi2 for a catalogued pair; prec coefficients from lo."""
    entry = catalog_entry(k, level)
    rec = entry.recipe(which)
    if prec < 1:
        raise ValueError("prec must be positive")
    g_expand = _g_expander(entry)
    return _catalog_cache.get((k, level, which), prec, lambda w: rec.expand(w, g_expand))


# ---------------------------------------------------------------------------
# The full census of one-dimensional spaces (for listings; only the 16
# non-CM pairs with k >= 4 have catalog entries).

ALL_ONE_DIM_ROWS = (
    {"k": 2, "N": 11, "cm": False, "genus": 1, "form": "eta(1^2 11^2)", "prefix": "q - 2q^2 - q^3 + 2q^4"},
    {"k": 2, "N": 14, "cm": False, "genus": 1, "form": "eta(1 2 7 14)", "prefix": "q - q^2 - 2q^3 + q^4"},
    {"k": 2, "N": 15, "cm": False, "genus": 1, "form": "eta(1 3 5 15)", "prefix": "q - q^2 - q^3 - q^4"},
    {"k": 2, "N": 17, "cm": False, "genus": 1, "form": None, "prefix": "q - q^2 - q^4 - 2q^5 + 4q^7"},
    {"k": 2, "N": 19, "cm": False, "genus": 1, "form": None, "prefix": "q - 2q^3 - 2q^4 + 3q^5 - q^7"},
    {"k": 2, "N": 20, "cm": False, "genus": 1, "form": "eta(2^2 10^2)", "prefix": "q - 2q^3 - q^5 + 2q^7"},
    {"k": 2, "N": 21, "cm": False, "genus": 1, "form": None, "prefix": "q - q^2 + q^3 - q^4 - 2q^5"},
    {"k": 2, "N": 24, "cm": False, "genus": 1, "form": "eta(2 4 6 12)", "prefix": "q - q^3 - 2q^5 + q^9"},
    {"k": 2, "N": 27, "cm": True, "genus": 1, "form": "eta(3^2 9^2)", "prefix": "q - 2q^4 - q^7 + 5q^13"},
    {"k": 2, "N": 32, "cm": True, "genus": 1, "form": "eta(4^2 8^2)", "prefix": "q - 2q^5 - 3q^9 + 6q^13"},
    {"k": 2, "N": 36, "cm": True, "genus": 1, "form": "eta(6^4)", "prefix": "q - 4q^7 + 2q^13 + 8q^19"},
    {"k": 2, "N": 49, "cm": True, "genus": 1, "form": None, "prefix": "q + q^2 - q^4 - 3q^8 - 3q^9"},
    {"k": 4, "N": 5, "cm": False, "genus": 0, "form": "eta(1^4 5^4)", "prefix": "q - 4q^2 + 2q^3 + 8q^4"},
    {"k": 4, "N": 6, "cm": False, "genus": 0, "form": "eta(1^2 2^2 3^2 6^2)", "prefix": "q - 2q^2 - 3q^3 + 4q^4"},
    {"k": 4, "N": 7, "cm": False, "genus": 0, "form": "eta(1^5 2^-1 7^5 14^-1) + 4*eta(1^2 2^2 7^2 14^2)", "prefix": "q - q^2 - 2q^3 - 7q^4"},
    {"k": 4, "N": 8, "cm": False, "genus": 0, "form": "eta(2^4 4^4)", "prefix": "q - 4q^3 - 2q^5 + 24q^7"},
    {"k": 4, "N": 9, "cm": True, "genus": 0, "form": "eta(3^8)", "prefix": "q - 8q^4 + 20q^7 - 70q^13"},
    {"k": 6, "N": 3, "cm": False, "genus": 0, "form": "eta(1^6 3^6)", "prefix": "q - 6q^2 + 9q^3 + 4q^4"},
    {"k": 6, "N": 4, "cm": False, "genus": 0, "form": "eta(2^12)", "prefix": "q - 12q^3 + 54q^5 - 88q^7"},
    {"k": 6, "N": 5, "cm": False, "genus": 0, "form": "eta(1^4 5^4)*(5E2(5z)-E2(z))/4", "prefix": "q + 2q^2 - 4q^3 - 28q^4 + 25q^5"},
    {"k": 8, "N": 2, "cm": False, "genus": 0, "form": "eta(1^8 2^8)", "prefix": "q - 8q^2 + 12q^3 + 64q^4"},
    {"k": 8, "N": 3, "cm": False, "genus": 0, "form": "eta(1^6 3^4)*(eta(1^3)+9*eta(9^3))^2", "prefix": "q + 6q^2 - 27q^3 - 92q^4"},
    {"k": 10, "N": 2, "cm": False, "genus": 0, "form": "eta(2^28 4^-8) + 16*eta(1^8 2^4 4^8)", "prefix": "q + 16q^2 - 156q^3 + 256q^4"},
    {"k": 12, "N": 1, "cm": False, "genus": 0, "form": "Delta", "prefix": "q - 24q^2 + 252q^3 - 1472q^4"},
    {"k": 16, "N": 1, "cm": False, "genus": 0, "form": "Delta*E4", "prefix": "q + 216q^2 - 3348q^3 + 13888q^4"},
    {"k": 18, "N": 1, "cm": False, "genus": 0, "form": "Delta*E6", "prefix": "q - 528q^2 - 4284q^3 + 147712q^4"},
    {"k": 20, "N": 1, "cm": False, "genus": 0, "form": "Delta*E4^2", "prefix": "q + 456q^2 + 50652q^3 - 316352q^4"},
    {"k": 22, "N": 1, "cm": False, "genus": 0, "form": "Delta*E4*E6", "prefix": "q - 288q^2 - 128844q^3 - 2014208q^4"},
    {"k": 26, "N": 1, "cm": False, "genus": 0, "form": "Delta*E4^2*E6", "prefix": "q - 48q^2 - 195804q^3 - 33552128q^4"},
)
