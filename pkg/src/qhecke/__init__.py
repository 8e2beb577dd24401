"""Exact q-series arithmetic and verification for one-dimensional cusp form spaces.

The package expands the catalogued modular forms with exact rational
coefficients, builds the canonical pole-order bases phi_n and F_m by
leading-term elimination, and verifies Zagier duality, the Hecke
decomposition of F | T_k(p^n), and the p-adic valuation identities for
v_p(C(p^m)) coefficient by coefficient on explicit precision windows.
"""

from .basis import BasisCache, BasisElement, build_f, build_phi, duality_residuals, residue_pairing
from .errors import (
    EmptyWindow,
    IndexOutOfRange,
    IntegralityViolation,
    NonIntegralValuation,
    NotADivisor,
    NotInvertible,
    NotPrime,
    OutOfWindow,
    PrecisionExhausted,
    PrefixMismatch,
    QHeckeError,
    UnknownPair,
)
from .forms import (
    CatalogEntry,
    EtaQuotientSpec,
    catalog_entry,
    catalog_form,
    catalog_pairs,
    eisenstein_series,
    eta_cusp_order,
    eta_modularity_check,
    eta_product_expand,
    named_form,
)
from .operators import apply_u, apply_v, hecke_tpn, is_prime, theta_power
from .qseries import QSeries
from .valuations import (
    INF,
    BetaTable,
    SeriesValuation,
    ValuationReport,
    beta_binomial,
    beta_recurrence,
    c_coeff,
    scan_qualifying_primes,
    smallest_qualifying_prime,
    verify_coefficient_formula,
    verify_expansion_identity,
    verify_hecke_decomposition,
    verify_valuations,
    vp_rat,
    vp_series,
)

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "EtaQuotientSpec",
    "CatalogEntry",
    "BasisCache",
    "BasisElement",
    "BetaTable",
    "SeriesValuation",
    "ValuationReport",
    "INF",
    "apply_u",
    "apply_v",
    "beta_binomial",
    "beta_recurrence",
    "build_f",
    "build_phi",
    "c_coeff",
    "catalog_entry",
    "catalog_form",
    "catalog_pairs",
    "duality_residuals",
    "eisenstein_series",
    "eta_cusp_order",
    "eta_modularity_check",
    "eta_product_expand",
    "hecke_tpn",
    "is_prime",
    "named_form",
    "residue_pairing",
    "scan_qualifying_primes",
    "smallest_qualifying_prime",
    "theta_power",
    "verify_coefficient_formula",
    "verify_expansion_identity",
    "verify_hecke_decomposition",
    "verify_valuations",
    "vp_rat",
    "vp_series",
    "QHeckeError",
    "EmptyWindow",
    "NotInvertible",
    "OutOfWindow",
    "NonIntegralValuation",
    "UnknownPair",
    "PrefixMismatch",
    "NotADivisor",
    "NotPrime",
    "PrecisionExhausted",
    "IntegralityViolation",
    "IndexOutOfRange",
]
