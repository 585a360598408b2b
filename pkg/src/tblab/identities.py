"""The identity registry and verification driver.

Every registered identity equates a K-Bessel-weighted twisted divisor
series (or, for the summation formulas, a finite weighted sum) with a
closed-form side built from Gamma/zeta/L values, Gauss sums and an
auxiliary rational-tail series.  verify() assembles the two sides along
independent code paths - the Bessel machinery never touches the
closed-form side, and vice versa - and reports the residual.

Identity tags:

* T2_1..T2_15, C2_1, C2_2: series with integer weight k, grouped by the
  twist (plain, bar, two-character) and by nu > 0 versus nu = 0.
* P1_1: the character-free baseline identity with weight -nu.
* T3_1..T3_8, C3_1..C3_6: weight -nu identities with rational Cohen
  tails; C3_1..C3_4 are the elementary nu = 1/2 specializations, C3_5
  and C3_6 the equal-character ones.
* T4_1..T4_8, C4_1, C4_2: summation formulas equating a finite sum
  against a main integral plus an oscillatory Bessel-kernel expansion.

Hypotheses are enforced before any numerics run: violating a parity,
primitivity, range or excluded-parameter clause raises HypothesisError
or ExcludedParameter naming the clause, never a silent wrong answer.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .arith import BAR_TWISTED, TWISTED, TWO_CHAR, DivisorSumSpec, coefficient_array
from .characters import Character, enumerate_characters, gauss_sum
from .errors import DomainError, ExcludedParameter, HypothesisError
from .series import (
    QuadratureSpec,
    SeriesParams,
    adaptive_integral,
    bessel_series,
    cohen_tail_series,
    log_kernel_series,
    oscillatory_kernel_integrals,
    shifted_power_series,
)
from .specfun import (
    EULER_GAMMA,
    L_derivative,
    dirichlet_L,
    gamma,
    riemann_zeta,
    zeta_derivative,
)

__all__ = [
    "IdentityCase",
    "VerificationReport",
    "THEOREMS",
    "DEFAULT_TOLERANCES",
    "TEST_FUNCTIONS",
    "verify",
    "run_suite",
    "default_cases",
    "positivity_scan",
    "report_record",
    "write_reports",
]

PI = math.pi
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class IdentityCase:
    """One identity instance: a theorem tag plus all parameters it needs.

    Single-character identities address chi as (q, char_index); the
    two-character ones use chi1 = (p, char_index), chi2 = (q, char2_index).
    """

    theorem: str
    q: int | None = None
    char_index: int | None = None
    p: int | None = None
    char2_index: int | None = None
    k: int | None = None
    nu: float | None = None
    a: float | None = None
    x: float | None = None
    N: int | None = None
    alpha: float | None = None
    beta: float | None = None
    f: str | None = None

    def params(self) -> dict:
        out = {}
        for key, val in asdict(self).items():
            if key != "theorem" and val is not None:
                out[key] = val
        return out


@dataclass
class VerificationReport:
    case: IdentityCase
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    lhs_terms: int
    rhs_terms: int
    passed: bool
    tol: float
    wall_ms: float


# test functions for the summation formulas: entire, so the analyticity
# hypothesis is satisfied on any interval
TEST_FUNCTIONS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "one": lambda t: np.ones_like(np.asarray(t, dtype=float)),
    "t": lambda t: np.asarray(t, dtype=float),
    "t2": lambda t: np.asarray(t, dtype=float) ** 2,
    "t3": lambda t: np.asarray(t, dtype=float) ** 3,
    "t4": lambda t: np.asarray(t, dtype=float) ** 4,
    "exp": lambda t: np.exp(-np.asarray(t, dtype=float)),
    "gauss": lambda t: np.exp(-np.asarray(t, dtype=float) ** 2 / 4.0),
}

DEFAULT_TOLERANCES = {
    "sec2": 1e-8,
    "classical": 1e-8,
    "cohen": 1e-7,
    "cohen-half": 1e-9,
    "voronoi": 1e-3,
}

# below this |lhs| the pass rule compares absolutely instead of relatively
_ABS_CUTOFF = {"voronoi": 1.0}
_ABS_CUTOFF_DEFAULT = 1e-6

VORONOI_KERNEL_TERMS = 20000
VORONOI_WINDOW = 4000


# -- hypothesis helpers ----------------------------------------------------


def _req(cond: bool, clause: str) -> None:
    if not cond:
        raise HypothesisError(clause)


def _req_not_positive_integer(value: float, name: str) -> None:
    if abs(value - round(value)) <= 1e-6 and round(value) >= 1:
        raise ExcludedParameter(f"{name} = {value:.6g} must not be a positive integer")


def _get_char(q: int | None, idx: int | None, what: str) -> Character:
    if q is None or idx is None:
        raise DomainError(f"{what}: modulus and character index are required")
    if q < 1:
        raise DomainError(f"{what}: modulus must be positive")
    chars = enumerate_characters(q)
    if not 0 <= idx < len(chars):
        raise DomainError(
            f"{what}: character index {idx} out of range (phi({q}) = {len(chars)})")
    return chars[idx]


def _req_odd_primitive(chi: Character, name: str) -> None:
    _req(chi.is_odd, f"{name} must be an odd character")
    _req(chi.is_primitive, f"{name} must be primitive")


def _req_even_primitive(chi: Character, name: str) -> None:
    _req(chi.is_even, f"{name} must be an even character")
    _req(not chi.is_principal, f"{name} must be non-principal")
    _req(chi.is_primitive, f"{name} must be primitive")


def _req_positive(value, name: str) -> None:
    _req(value is not None and value > 0, f"{name} must be positive")


def _req_k(case: IdentityCase, parity: str, minimum: int) -> int:
    k = case.k
    _req(k is not None and k == int(k) and k >= minimum,
         f"k must be an integer >= {minimum}")
    if parity == "even":
        _req(k % 2 == 0, "k must be an even integer")
    else:
        _req(k % 2 == 1, "k must be an odd integer")
    return int(k)


def _req_nu_positive(case: IdentityCase) -> float:
    _req(case.nu is not None and case.nu > 0, "nu must have positive real part")
    return float(case.nu)


def _req_cohen_nu_N(case: IdentityCase) -> tuple[float, int]:
    nu, N = case.nu, case.N
    _req(nu is not None and nu >= 0, "nu must have non-negative real part")
    _req(abs(nu - round(nu)) > 1e-8, "nu must not be an integer")
    _req(N is not None and N >= math.floor((nu + 1.0) / 2.0),
         "N must be an integer >= floor((nu + 1)/2)")
    return float(nu), int(N)


def _req_voronoi(case: IdentityCase) -> tuple[float, float, float, Callable]:
    nu = case.nu
    _req(nu is not None and 0.0 < nu < 0.5, "nu must lie strictly between 0 and 1/2")
    alpha, beta = case.alpha, case.beta
    _req(alpha is not None and beta is not None and 0 < alpha < beta,
         "the interval must satisfy 0 < alpha < beta")
    for val, name in ((alpha, "alpha"), (beta, "beta")):
        if abs(val - round(val)) <= 1e-9:
            raise ExcludedParameter(f"{name} = {val} must not be an integer")
    if case.f not in TEST_FUNCTIONS:
        raise DomainError(
            f"unknown test function {case.f!r}; choose from {sorted(TEST_FUNCTIONS)}")
    return float(nu), float(alpha), float(beta), TEST_FUNCTIONS[case.f]


def _ax(case: IdentityCase) -> tuple[float, float]:
    _req_positive(case.a, "a")
    _req_positive(case.x, "x")
    return float(case.a), float(case.x)


# -- common building blocks ------------------------------------------------


def _tau(chi: Character) -> complex:
    return gauss_sum(chi).value


def _lhs_bessel(spec: DivisorSumSpec, a: float, x: float, nu: float,
                tol: float) -> tuple[complex, int]:
    res = bessel_series(spec, SeriesParams(
        a, x, nu, tol=min(1e-12, tol * 1e-3), rel_tol=min(1e-11, tol * 1e-3)))
    return res.value, res.terms


def _exp_half_sum(spec: DivisorSumSpec, x: float) -> tuple[complex, int]:
    """2 pi sum f(n) e^{-4 pi sqrt(n x)}: the elementary nu = 1/2 shape."""
    lam = 4.0 * PI * math.sqrt(x)
    n_max = max(64, int((45.0 / lam) ** 2) + 8)
    coef = coefficient_array(spec, n_max)[1:]
    ns = np.arange(1, n_max + 1, dtype=float)
    return TWO_PI * complex(np.sum(coef * np.exp(-lam * np.sqrt(ns)))), n_max


def _c_shift(a: float, x: float, modulus_product: int) -> float:
    return a * a * modulus_product * x / (16.0 * PI * PI)


# ===================== weight-k identities (nu > 0) ======================


def _t2_1(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_1")
    _req_odd_primitive(chi, "chi")
    k = _req_k(case, "even", 0)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, k, chi), a, x, nu, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    sgn = (-1.0) ** (k // 2)
    delta_k = 1.0 if k == 0 else 0.0
    tail = shifted_power_series(
        DivisorSumSpec(BAR_TWISTED, k, chi.conjugate()), nu + k + 1.0, c)
    rhs = (delta_k * 2.0 ** (nu + 1.0) / a ** (nu + 2.0)
           * gamma(1.0 + nu) * dirichlet_L(1.0, chi) * x ** (-nu / 2.0 - 1.0))
    rhs += (sgn * 1j * q ** k / (a ** nu * 2.0 ** (k + 2.0 - nu) * PI ** (k + 1.0))
            * gamma(nu) * tau * math.factorial(k)
            * dirichlet_L(k + 1.0, chi.conjugate()) * x ** (-nu / 2.0))
    rhs -= (sgn * 1j * a ** nu * q ** (nu + k) * x ** (nu / 2.0)
            / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
            * gamma(nu + k + 1.0) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_3(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_3")
    _req_odd_primitive(chi, "chi")
    k = _req_k(case, "even", 2)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, k, chi), a, x, nu, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    sgn = (-1.0) ** (k // 2)
    tail = shifted_power_series(
        DivisorSumSpec(TWISTED, k, chi.conjugate()), nu + k + 1.0, c)
    rhs = (2.0 ** (nu + 2.0 * k + 1.0) / a ** (nu + 2.0 * k + 2.0)
           * math.factorial(k) * gamma(nu + k + 1.0)
           * dirichlet_L(1.0 + k, chi) * x ** (-nu / 2.0 - k - 1.0))
    rhs -= (sgn * 1j * (a * q) ** nu * x ** (nu / 2.0)
            / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
            * gamma(nu + k + 1.0) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_5(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_5")
    _req_even_primitive(chi, "chi")
    k = _req_k(case, "odd", 1)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, k, chi), a, x, nu, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    # the tail twist pairs opposite to the series side (bar against plain),
    # matching the nu = 0 specialization
    tail = shifted_power_series(
        DivisorSumSpec(BAR_TWISTED, k, chi.conjugate()), nu + k + 1.0, c)
    rhs = ((-1.0) ** ((k - 1) // 2) * q ** k
           / (a ** nu * 2.0 ** (k + 2.0 - nu) * PI ** (k + 1.0))
           * gamma(nu) * tau * math.factorial(k)
           * dirichlet_L(1.0 + k, chi.conjugate()) * x ** (-nu / 2.0))
    rhs += ((-1.0) ** ((k + 1) // 2) * a ** nu * q ** (nu + k) * x ** (nu / 2.0)
            / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
            * gamma(nu + k + 1.0) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_7(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_7")
    _req_even_primitive(chi, "chi")
    k = _req_k(case, "odd", 1)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, k, chi), a, x, nu, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    tail = shifted_power_series(
        DivisorSumSpec(TWISTED, k, chi.conjugate()), nu + k + 1.0, c)
    rhs = (2.0 ** (nu + 2.0 * k + 1.0) / a ** (nu + 2.0 * k + 2.0)
           * math.factorial(k) * gamma(nu + k + 1.0)
           * dirichlet_L(1.0 + k, chi) * x ** (-nu / 2.0 - k - 1.0))
    rhs += ((-1.0) ** ((k + 1) // 2) * (a * q) ** nu * x ** (nu / 2.0)
            / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
            * gamma(nu + k + 1.0) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _two_char_pair(case, what) -> tuple[Character, Character]:
    chi1 = _get_char(case.p, case.char_index, what + " (chi1)")
    chi2 = _get_char(case.q, case.char2_index, what + " (chi2)")
    return chi1, chi2


def _t2_10(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_10")
    _req(chi1.is_primitive and chi2.is_primitive, "chi1 and chi2 must be primitive")
    if chi1.is_even or chi2.is_even:
        _req(chi1.is_even and chi2.is_even and
             not chi1.is_principal and not chi2.is_principal,
             "chi1 and chi2 must be both non-principal even or both odd")
    k = _req_k(case, "odd", 1)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    p, q = case.p, case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi1, chi2), a, x, nu, tol)
    c = _c_shift(a, x, p * q)
    tail = shifted_power_series(
        DivisorSumSpec(TWO_CHAR, k, chi2.conjugate(), chi1.conjugate()),
        nu + k + 1.0, c)
    rhs = ((-1.0) ** ((k + 1) // 2) * (a * q) ** nu * p ** (nu + k) * x ** (nu / 2.0)
           / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
           * _tau(chi1) * _tau(chi2) * gamma(nu + k + 1.0) * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_14(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_14")
    _req(chi1.is_primitive and chi2.is_primitive, "chi1 and chi2 must be primitive")
    even = chi1 if chi1.is_even else chi2
    _req(chi1.parity != chi2.parity,
         "one character must be even and the other odd")
    _req(not even.is_principal, "the even character must be non-principal")
    k = _req_k(case, "even", 0)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    p, q = case.p, case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi1, chi2), a, x, nu, tol)
    c = _c_shift(a, x, p * q)
    tail = shifted_power_series(
        DivisorSumSpec(TWO_CHAR, k, chi2.conjugate(), chi1.conjugate()),
        nu + k + 1.0, c)
    rhs = ((-1.0) ** (k // 2) * (-1j) * (a * q) ** nu * p ** (nu + k) * x ** (nu / 2.0)
           / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
           * _tau(chi1) * _tau(chi2) * gamma(nu + k + 1.0) * tail.value)
    return lhs, rhs, lterms, tail.terms


def _c2_1(case, tol):
    chi = _get_char(case.q, case.char_index, "C2_1")
    _req(not chi.is_principal, "chi must be non-principal")
    _req(chi.is_primitive, "chi must be primitive")
    k = _req_k(case, "odd", 1)
    nu = _req_nu_positive(case)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi, chi), a, x, nu, tol)
    c = _c_shift(a, x, q * q)
    cb = chi.conjugate()
    tail = shifted_power_series(DivisorSumSpec(TWO_CHAR, k, cb, cb), nu + k + 1.0, c)
    rhs = ((-1.0) ** ((k + 1) // 2) * a ** nu * q ** (2.0 * nu + k) * x ** (nu / 2.0)
           / (2.0 ** (3.0 * nu + k + 2.0) * PI ** (2.0 * nu + k + 1.0))
           * _tau(chi) ** 2 * gamma(nu + k + 1.0) * tail.value)
    return lhs, rhs, lterms, tail.terms


# ===================== weight-k identities (nu = 0) ======================


def _log_const_block(chi: Character, k: int, a: float, x: float) -> complex:
    # -(1/4)[L(-k,chi)(log(8 pi/a^2) - 2 gamma - log x) + L'(-k,chi)]
    lval = dirichlet_L(-float(k), chi)
    lder = L_derivative(-float(k), chi)
    return -0.25 * (lval * (math.log(8.0 * PI / (a * a)) - 2.0 * EULER_GAMMA
                            - math.log(x)) + lder)


def _t2_2(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_2")
    _req_odd_primitive(chi, "chi")
    k = _req_k(case, "even", 0)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, k, chi), a, x, 0.0, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    tail = shifted_power_series(
        DivisorSumSpec(BAR_TWISTED, k, chi.conjugate()), k + 1.0, c,
        difference_form=True)
    delta_k = 1.0 if k == 0 else 0.0
    rhs = delta_k * 2.0 / (a * a * x) * dirichlet_L(1.0, chi)
    rhs += _log_const_block(chi, k, a, x)
    rhs += ((-1.0) ** (k // 2) * 1j * math.factorial(k) * q ** k
            / (2.0 * TWO_PI ** (k + 1.0)) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_4(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_4")
    _req_odd_primitive(chi, "chi")
    k = _req_k(case, "even", 2)
    a, x = _ax(case)
    lhs, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, k, chi), a, x, 0.0, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, case.q)
    tail = shifted_power_series(
        DivisorSumSpec(TWISTED, k, chi.conjugate()), k + 1.0, c,
        difference_form=True)
    rhs = (2.0 ** (2 * k + 1) / a ** (2 * k + 2) * math.factorial(k) ** 2
           * dirichlet_L(k + 1.0, chi) / x ** (k + 1.0))
    # full product-rule constant; for the odd-character case the second
    # summand vanishes (zeta trivial zero), for the even-character case
    # the first does (L(0, chi) = 0)
    rhs += 0.5 * (zeta_derivative(-float(k)) * dirichlet_L(0.0, chi)
                  + riemann_zeta(-float(k)) * L_derivative(0.0, chi))
    rhs += ((-1.0) ** (k // 2) * 1j * math.factorial(k)
            / (2.0 * TWO_PI ** (k + 1.0)) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_6(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_6")
    _req_even_primitive(chi, "chi")
    k = _req_k(case, "odd", 1)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, k, chi), a, x, 0.0, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, q)
    tail = shifted_power_series(
        DivisorSumSpec(BAR_TWISTED, k, chi.conjugate()), k + 1.0, c,
        difference_form=True)
    rhs = _log_const_block(chi, k, a, x)
    rhs += ((-1.0) ** ((k - 1) // 2) * math.factorial(k) * q ** k
            / (2.0 * TWO_PI ** (k + 1.0)) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_8(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_8")
    _req_even_primitive(chi, "chi")
    k = _req_k(case, "odd", 1)
    a, x = _ax(case)
    lhs, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, k, chi), a, x, 0.0, tol)
    tau = _tau(chi)
    c = _c_shift(a, x, case.q)
    tail = shifted_power_series(
        DivisorSumSpec(TWISTED, k, chi.conjugate()), k + 1.0, c,
        difference_form=True)
    rhs = (2.0 ** (2 * k + 1) / a ** (2 * k + 2) * math.factorial(k) ** 2
           * dirichlet_L(k + 1.0, chi) / x ** (k + 1.0))
    # full product-rule constant; for the odd-character case the second
    # summand vanishes (zeta trivial zero), for the even-character case
    # the first does (L(0, chi) = 0)
    rhs += 0.5 * (zeta_derivative(-float(k)) * dirichlet_L(0.0, chi)
                  + riemann_zeta(-float(k)) * L_derivative(0.0, chi))
    rhs += ((-1.0) ** ((k - 1) // 2) * math.factorial(k)
            / (2.0 * TWO_PI ** (k + 1.0)) * tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _matched_parity_constant(k: int, chi1: Character, chi2: Character) -> complex:
    if chi1.is_even and chi2.is_even:
        return dirichlet_L(-float(k), chi1) * L_derivative(0.0, chi2)
    return L_derivative(-float(k), chi1) * dirichlet_L(0.0, chi2)


def _t2_11(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_11")
    _req(chi1.is_primitive and chi2.is_primitive, "chi1 and chi2 must be primitive")
    if chi1.is_even or chi2.is_even:
        _req(chi1.is_even and chi2.is_even and
             not chi1.is_principal and not chi2.is_principal,
             "chi1 and chi2 must be both non-principal even or both odd")
    k = _req_k(case, "odd", 1)
    a, x = _ax(case)
    p, q = case.p, case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi1, chi2), a, x, 0.0, tol)
    c = _c_shift(a, x, p * q)
    tail = shifted_power_series(
        DivisorSumSpec(TWO_CHAR, k, chi2.conjugate(), chi1.conjugate()),
        k + 1.0, c, difference_form=True)
    rhs = 0.5 * _matched_parity_constant(k, chi1, chi2)
    rhs += ((-1.0) ** ((k - 1) // 2) * math.factorial(k) * p ** k
            / (2.0 * TWO_PI ** (k + 1.0)) * _tau(chi1) * _tau(chi2) * tail.value)
    return lhs, rhs, lterms, tail.terms


def _c2_2(case, tol):
    chi = _get_char(case.q, case.char_index, "C2_2")
    _req(not chi.is_principal, "chi must be non-principal")
    _req(chi.is_primitive, "chi must be primitive")
    k = _req_k(case, "odd", 1)
    a, x = _ax(case)
    q = case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi, chi), a, x, 0.0, tol)
    c = _c_shift(a, x, q * q)
    cb = chi.conjugate()
    tail = shifted_power_series(DivisorSumSpec(TWO_CHAR, k, cb, cb), k + 1.0, c,
                                difference_form=True)
    rhs = 0.5 * _matched_parity_constant(k, chi, chi)
    rhs += ((-1.0) ** ((k - 1) // 2) * math.factorial(k) * q ** k
            / (2.0 * TWO_PI ** (k + 1.0)) * _tau(chi) ** 2 * tail.value)
    return lhs, rhs, lterms, tail.terms


def _t2_15(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_15")
    _req(chi1.is_primitive and chi2.is_primitive, "chi1 and chi2 must be primitive")
    even = chi1 if chi1.is_even else chi2
    _req(chi1.parity != chi2.parity, "one character must be even and the other odd")
    _req(not even.is_principal, "the even character must be non-principal")
    k = _req_k(case, "even", 0)
    a, x = _ax(case)
    p, q = case.p, case.q
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, k, chi1, chi2), a, x, 0.0, tol)
    c = _c_shift(a, x, p * q)
    tail = shifted_power_series(
        DivisorSumSpec(TWO_CHAR, k, chi2.conjugate(), chi1.conjugate()),
        k + 1.0, c, difference_form=True)
    if chi1.is_odd:
        const = dirichlet_L(-float(k), chi1) * L_derivative(0.0, chi2)
    else:
        const = L_derivative(-float(k), chi1) * dirichlet_L(0.0, chi2)
    rhs = 0.5 * const
    rhs += ((-1.0) ** (k // 2) * 1j * math.factorial(k) * p ** k
            / (2.0 * TWO_PI ** (k + 1.0)) * _tau(chi1) * _tau(chi2) * tail.value)
    return lhs, rhs, lterms, tail.terms


# ================== log-kernel identities (k = 0, nu = 0) ================


def _t2_13(case, tol):
    chi = _get_char(case.q, case.char_index, "T2_13")
    _req_even_primitive(chi, "chi")
    a, x = _ax(case)
    q = case.q
    c = _c_shift(a, x, q)
    _req_not_positive_integer(c, "a^2*q*x/(16*pi^2)")
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, 0, chi), a, x, 0.0, tol)
    tau = _tau(chi)
    kernel = log_kernel_series(DivisorSumSpec(TWISTED, 0, chi.conjugate()), c)
    rhs = (2.0 / (a * a * x) * dirichlet_L(1.0, chi)
           - tau / 8.0 * dirichlet_L(1.0, chi.conjugate())
           + tau * c / (2.0 * PI * PI) * kernel.value)
    return lhs, rhs, lterms, kernel.terms


def _t2_12(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_12")
    _req_even_primitive(chi1, "chi1")
    _req_even_primitive(chi2, "chi2")
    a, x = _ax(case)
    p, q = case.p, case.q
    c = _c_shift(a, x, p * q)
    _req_not_positive_integer(c, "a^2*p*q*x/(16*pi^2)")
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, 0, chi1, chi2), a, x, 0.0, tol)
    kernel = log_kernel_series(
        DivisorSumSpec(TWO_CHAR, 0, chi1.conjugate(), chi2.conjugate()), c)
    rhs = _tau(chi1) * _tau(chi2) * c / (2.0 * PI * PI) * kernel.value
    return lhs, rhs, lterms, kernel.terms


def _t2_9(case, tol):
    chi1, chi2 = _two_char_pair(case, "T2_9")
    _req_odd_primitive(chi1, "chi1")
    _req_odd_primitive(chi2, "chi2")
    a, x = _ax(case)
    p, q = case.p, case.q
    c = _c_shift(a, x, p * q)
    _req_not_positive_integer(c, "a^2*p*q*x/(16*pi^2)")
    lhs, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, 0, chi1, chi2), a, x, 0.0, tol)
    kernel = log_kernel_series(
        DivisorSumSpec(TWO_CHAR, 0, chi1.conjugate(), chi2.conjugate()), c,
        over_n=True)
    l1, l2 = dirichlet_L(0.0, chi1), dirichlet_L(0.0, chi2)
    d1, d2 = L_derivative(0.0, chi1), L_derivative(0.0, chi2)
    rhs = 0.5 * (l1 * l2 * (-2.0 * EULER_GAMMA + math.log(4.0 / (a * a * x)))
                 + d1 * l2 + l1 * d2)
    # proof-consistent constant: tau1 tau2 c^2/(2 pi^2) on log(c/n)
    rhs -= _tau(chi1) * _tau(chi2) * c * c / (2.0 * PI * PI) * kernel.value
    return lhs, rhs, lterms, kernel.terms


# =================== weight -nu identities (Cohen type) ==================


def _p1_1(case, tol):
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x = float(case.x)
    _req_not_positive_integer(x, "x")
    triv = enumerate_characters(1)[0]
    spec = DivisorSumSpec(TWISTED, -nu, triv)
    series, lterms = _lhs_bessel(spec, 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn, cs = math.sin(PI * nu / 2.0), math.cos(PI * nu / 2.0)
    tail = cohen_tail_series(spec, nu, N, x)
    rhs = (-gamma(nu) * riemann_zeta(nu) / TWO_PI ** (nu - 1.0)
           + gamma(1.0 + nu) * riemann_zeta(1.0 + nu)
           / (PI ** (nu + 1.0) * 2.0 ** nu * x))
    rhs += riemann_zeta(nu) * x ** (nu - 1.0) / sn
    rhs += 2.0 / sn * sum(riemann_zeta(2.0 * j) * riemann_zeta(2.0 * j - nu)
                          * x ** (2 * j - 1) for j in range(1, N + 1))
    rhs -= PI * riemann_zeta(nu + 1.0) * x ** nu / cs
    rhs += 2.0 / sn * x ** (2 * N + 1) * tail.value
    return lhs, rhs, lterms, tail.terms


def _t3_1(case, tol):
    chi = _get_char(case.q, case.char_index, "T3_1")
    _req_even_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, q = float(case.x), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, -nu, cb), 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn = math.sin(PI * nu / 2.0)
    tau = _tau(chi)
    qx = q * x
    tail = cohen_tail_series(DivisorSumSpec(BAR_TWISTED, -nu, chi), nu, N, qx)
    rhs = (-gamma(nu) * dirichlet_L(nu, cb) / TWO_PI ** (nu - 1.0)
           + 2.0 * gamma(1.0 + nu) * dirichlet_L(1.0 + nu, cb)
           / (TWO_PI ** (nu + 1.0) * x))
    inner = sum(riemann_zeta(2.0 * j) * dirichlet_L(2.0 * j - nu, chi)
                * qx ** (2 * j - 1) for j in range(1, N + 1))
    inner += qx ** (2 * N + 1) * tail.value
    rhs += 2.0 * q ** (1.0 - nu) / (tau * sn) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_2(case, tol):
    chi = _get_char(case.q, case.char_index, "T3_2")
    _req_even_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, q = float(case.x), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, -nu, cb),
                                 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn, cs = math.sin(PI * nu / 2.0), math.cos(PI * nu / 2.0)
    qx = q * x
    tail = cohen_tail_series(DivisorSumSpec(TWISTED, -nu, chi), nu, N, qx)
    inner = (dirichlet_L(nu, chi) * qx ** (nu - 1.0) / sn
             - PI * dirichlet_L(1.0 + nu, chi) * qx ** nu / cs)
    inner += 2.0 / sn * sum(riemann_zeta(2.0 * j - nu) * dirichlet_L(2.0 * j, chi)
                            * qx ** (2 * j - 1) for j in range(1, N + 1))
    inner += 2.0 / sn * qx ** (2 * N + 1) * tail.value
    rhs = case.q / _tau(chi) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_3(case, tol):
    chi = _get_char(case.q, case.char_index, "T3_3")
    _req_odd_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, q = float(case.x), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(TWISTED, -nu, cb), 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    cs = math.cos(PI * nu / 2.0)
    qx = q * x
    tail = cohen_tail_series(DivisorSumSpec(BAR_TWISTED, -nu, chi), nu, N, qx,
                             inner_power_offset=1, divide_by_n=True)
    rhs = (-gamma(nu) * dirichlet_L(nu, cb) / TWO_PI ** (nu - 1.0)
           + 2.0 * gamma(1.0 + nu) * dirichlet_L(1.0 + nu, cb)
           / (TWO_PI ** (nu + 1.0) * x))
    inner = riemann_zeta(nu + 1.0) * dirichlet_L(1.0, chi) * qx ** nu
    inner -= sum(riemann_zeta(2.0 * j) * dirichlet_L(2.0 * j - nu, chi)
                 * qx ** (2 * j - 1) for j in range(1, N + 1))
    inner -= qx ** (2 * N + 1) * tail.value
    rhs += 2.0j * q ** (1.0 - nu) / (_tau(chi) * cs) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_4(case, tol):
    chi = _get_char(case.q, case.char_index, "T3_4")
    _req_odd_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, q = float(case.x), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(BAR_TWISTED, -nu, cb),
                                 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn, cs = math.sin(PI * nu / 2.0), math.cos(PI * nu / 2.0)
    qx = q * x
    tail = cohen_tail_series(DivisorSumSpec(TWISTED, -nu, chi), nu, N, qx,
                             inner_power_offset=1)
    rhs = 2.0 * gamma(nu) * riemann_zeta(nu) * dirichlet_L(0.0, cb) / TWO_PI ** (nu - 1.0)
    inner = (dirichlet_L(nu, chi) * qx ** (nu - 1.0) / cs
             + PI * dirichlet_L(1.0 + nu, chi) * qx ** nu / sn)
    inner += 2.0 / cs * sum(riemann_zeta(2.0 * j + 1.0 - nu)
                            * dirichlet_L(2.0 * j + 1.0, chi) * qx ** (2 * j)
                            for j in range(1, N))
    inner += 2.0 / cs * qx ** (2 * N) * tail.value
    rhs += 1j * q / _tau(chi) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_5(case, tol):
    chi1, chi2 = _two_char_pair(case, "T3_5")
    _req_even_primitive(chi1, "chi1")
    _req_even_primitive(chi2, "chi2")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, p, q = float(case.x), case.p, case.q
    _req_not_positive_integer(p * q * x, "p*q*x")
    series, lterms = _lhs_bessel(
        DivisorSumSpec(TWO_CHAR, -nu, chi1.conjugate(), chi2.conjugate()),
        4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn = math.sin(PI * nu / 2.0)
    pqx = p * q * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi2, chi1), nu, N, pqx)
    inner = sum(dirichlet_L(2.0 * j, chi2) * dirichlet_L(2.0 * j - nu, chi1)
                * pqx ** (2 * j - 1) for j in range(1, N + 1))
    inner += pqx ** (2 * N + 1) * tail.value
    rhs = 2.0 * p ** (1.0 - nu) * q / (_tau(chi1) * _tau(chi2) * sn) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_6(case, tol):
    chi1, chi2 = _two_char_pair(case, "T3_6")
    _req_odd_primitive(chi1, "chi1")
    _req_odd_primitive(chi2, "chi2")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, p, q = float(case.x), case.p, case.q
    _req_not_positive_integer(p * q * x, "p*q*x")
    series, lterms = _lhs_bessel(
        DivisorSumSpec(TWO_CHAR, -nu, chi1.conjugate(), chi2.conjugate()),
        4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn = math.sin(PI * nu / 2.0)
    pqx = p * q * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi2, chi1), nu, N, pqx,
                             inner_power_offset=2, divide_by_n=True)
    rhs = (2.0 * gamma(nu) * dirichlet_L(nu, chi1.conjugate())
           * dirichlet_L(0.0, chi2.conjugate()) / TWO_PI ** (nu - 1.0))
    inner = -dirichlet_L(nu + 1.0, chi2) * dirichlet_L(1.0, chi1) * pqx ** nu
    inner += sum(dirichlet_L(2.0 * j + 1.0, chi2) * dirichlet_L(2.0 * j + 1.0 - nu, chi1)
                 * pqx ** (2 * j) for j in range(1, N))
    inner += pqx ** (2 * N) * tail.value
    rhs -= 2.0 * p ** (1.0 - nu) * q / (_tau(chi1) * _tau(chi2) * sn) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_7(case, tol):
    chi1, chi2 = _two_char_pair(case, "T3_7")
    _req_even_primitive(chi1, "chi1")
    _req_odd_primitive(chi2, "chi2")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, p, q = float(case.x), case.p, case.q
    _req_not_positive_integer(p * q * x, "p*q*x")
    series, lterms = _lhs_bessel(
        DivisorSumSpec(TWO_CHAR, -nu, chi1.conjugate(), chi2.conjugate()),
        4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    cs = math.cos(PI * nu / 2.0)
    pqx = p * q * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi2, chi1), nu, N, pqx,
                             inner_power_offset=1)
    rhs = (2.0 * gamma(nu) * dirichlet_L(nu, chi1.conjugate())
           * dirichlet_L(0.0, chi2.conjugate()) / TWO_PI ** (nu - 1.0))
    inner = sum(dirichlet_L(2.0 * j + 1.0, chi2) * dirichlet_L(2.0 * j + 1.0 - nu, chi1)
                * pqx ** (2 * j) for j in range(1, N))
    inner += pqx ** (2 * N) * tail.value
    rhs += 2.0j * p ** (1.0 - nu) * q / (_tau(chi1) * _tau(chi2) * cs) * inner
    return lhs, rhs, lterms, tail.terms


def _t3_8(case, tol):
    chi1, chi2 = _two_char_pair(case, "T3_8")
    _req_odd_primitive(chi1, "chi1")
    _req_even_primitive(chi2, "chi2")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, p, q = float(case.x), case.p, case.q
    _req_not_positive_integer(p * q * x, "p*q*x")
    series, lterms = _lhs_bessel(
        DivisorSumSpec(TWO_CHAR, -nu, chi1.conjugate(), chi2.conjugate()),
        4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    cs = math.cos(PI * nu / 2.0)
    pqx = p * q * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi2, chi1), nu, N, pqx,
                             inner_power_offset=1, divide_by_n=True)
    inner = dirichlet_L(nu + 1.0, chi2) * dirichlet_L(1.0, chi1) * pqx ** nu
    inner -= sum(dirichlet_L(2.0 * j, chi2) * dirichlet_L(2.0 * j - nu, chi1)
                 * pqx ** (2 * j - 1) for j in range(1, N + 1))
    inner -= pqx ** (2 * N + 1) * tail.value
    rhs = 2.0j * p ** (1.0 - nu) * q / (_tau(chi1) * _tau(chi2) * cs) * inner
    return lhs, rhs, lterms, tail.terms


def _c3_5(case, tol):
    chi = _get_char(case.q, case.char_index, "C3_5")
    _req_even_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, q = float(case.x), case.q
    _req_not_positive_integer(q * q * x, "q^2*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, -nu, cb, cb),
                                 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn = math.sin(PI * nu / 2.0)
    qqx = q * q * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi, chi), nu, N, qqx)
    inner = sum(dirichlet_L(2.0 * j, chi) * dirichlet_L(2.0 * j - nu, chi)
                * qqx ** (2 * j - 1) for j in range(1, N + 1))
    inner += qqx ** (2 * N + 1) * tail.value
    rhs = 2.0 * q ** (2.0 - nu) / (_tau(chi) ** 2 * sn) * inner
    return lhs, rhs, lterms, tail.terms


def _c3_6(case, tol):
    chi = _get_char(case.p, case.char_index, "C3_6")
    _req_odd_primitive(chi, "chi")
    nu, N = _req_cohen_nu_N(case)
    _req_positive(case.x, "x")
    x, p = float(case.x), case.p
    _req_not_positive_integer(p * p * x, "p^2*x")
    cb = chi.conjugate()
    series, lterms = _lhs_bessel(DivisorSumSpec(TWO_CHAR, -nu, cb, cb),
                                 4.0 * PI, x, nu, tol)
    lhs = 8.0 * PI * x ** (nu / 2.0) * series
    sn = math.sin(PI * nu / 2.0)
    ppx = p * p * x
    tail = cohen_tail_series(DivisorSumSpec(TWO_CHAR, -nu, chi, chi), nu, N, ppx,
                             inner_power_offset=2, divide_by_n=True)
    rhs = (2.0 * gamma(nu) * dirichlet_L(nu, cb) * dirichlet_L(0.0, cb)
           / TWO_PI ** (nu - 1.0))
    inner = -dirichlet_L(nu + 1.0, chi) * dirichlet_L(1.0, chi) * ppx ** nu
    inner += sum(dirichlet_L(2.0 * j + 1.0, chi) * dirichlet_L(2.0 * j + 1.0 - nu, chi)
                 * ppx ** (2 * j) for j in range(1, N))
    inner += ppx ** (2 * N) * tail.value
    rhs -= 2.0 * p ** (2.0 - nu) / (_tau(chi) ** 2 * sn) * inner
    return lhs, rhs, lterms, tail.terms


# ---- elementary nu = 1/2 specializations --------------------------------


def _half_case_x(case) -> float:
    _req_positive(case.x, "x")
    return float(case.x)


def _c3_1(case, tol):
    chi = _get_char(case.q, case.char_index, "C3_1")
    _req_even_primitive(chi, "chi")
    x, q = _half_case_x(case), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    lhs, lterms = _exp_half_sum(DivisorSumSpec(TWISTED, -0.5, cb), x)
    qx = q * x
    tail = cohen_tail_series(DivisorSumSpec(BAR_TWISTED, -0.5, chi), 0.5, 0, qx)
    rhs = (-PI * dirichlet_L(0.5, cb)
           + dirichlet_L(1.5, cb) / (4.0 * PI * x)
           + 2.0 * q ** 1.5 * x / _tau(chi) * tail.value)
    return lhs, rhs, lterms, tail.terms


def _c3_2(case, tol):
    chi = _get_char(case.q, case.char_index, "C3_2")
    _req_even_primitive(chi, "chi")
    x, q = _half_case_x(case), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    lhs, lterms = _exp_half_sum(DivisorSumSpec(BAR_TWISTED, -0.5, cb), x)
    qx = q * x
    tau = _tau(chi)
    tail = cohen_tail_series(DivisorSumSpec(TWISTED, -0.5, chi), 0.5, 0, qx)
    rhs = (q ** 0.5 / tau * dirichlet_L(0.5, chi) / math.sqrt(x)
           - PI * q ** 1.5 / tau * dirichlet_L(1.5, chi) * math.sqrt(x)
           + 2.0 * q * q * x / tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _c3_3(case, tol):
    chi = _get_char(case.q, case.char_index, "C3_3")
    _req_odd_primitive(chi, "chi")
    x, q = _half_case_x(case), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    lhs, lterms = _exp_half_sum(DivisorSumSpec(TWISTED, -0.5, cb), x)
    qx = q * x
    tau = _tau(chi)
    tail = cohen_tail_series(DivisorSumSpec(BAR_TWISTED, -0.5, chi), 0.5, 0, qx,
                             inner_power_offset=1, divide_by_n=True)
    rhs = (-PI * dirichlet_L(0.5, cb)
           + dirichlet_L(1.5, cb) / (4.0 * PI * x)
           + 2.0j * q / tau * riemann_zeta(1.5) * dirichlet_L(1.0, chi) * math.sqrt(x)
           - 2.0j * q ** 1.5 * x / tau * tail.value)
    return lhs, rhs, lterms, tail.terms


def _c3_4(case, tol):
    # stated with the minimal admissible truncation index; this variant
    # uses the first index for which the rational tail converges
    chi = _get_char(case.q, case.char_index, "C3_4")
    _req_odd_primitive(chi, "chi")
    x, q = _half_case_x(case), case.q
    _req_not_positive_integer(q * x, "q*x")
    cb = chi.conjugate()
    lhs, lterms = _exp_half_sum(DivisorSumSpec(BAR_TWISTED, -0.5, cb), x)
    qx = q * x
    tau = _tau(chi)
    tail = cohen_tail_series(DivisorSumSpec(TWISTED, -0.5, chi), 0.5, 1, qx,
                             inner_power_offset=1)
    rhs = (TWO_PI * riemann_zeta(0.5) * dirichlet_L(0.0, cb)
           + 1j * q ** 0.5 / tau * dirichlet_L(0.5, chi) / math.sqrt(x)
           + 1j * PI * q ** 1.5 / tau * dirichlet_L(1.5, chi) * math.sqrt(x)
           + 2.0j * q * qx * qx / tau * tail.value)
    return lhs, rhs, lterms, tail.terms


# ====================== summation formulas (section 4) ====================


def _finite_side(f, alpha: float, beta: float, spec: DivisorSumSpec,
                 over_j: bool) -> tuple[complex, int]:
    from .arith import divisor_sum
    js = range(math.floor(alpha) + 1, math.ceil(beta))
    acc = 0j
    for j in js:
        wj = divisor_sum(spec, j)
        if over_j:
            wj = wj / j
        acc += wj * float(f(np.array([float(j)]))[0])
    return acc, len(js)


def _kernel_expansion(f, alpha: float, beta: float, nu: float,
                      spec: DivisorSumSpec, kernel_scale: float,
                      t_exp: float, variant: str) -> tuple[complex, int]:
    """Doubly window-averaged partial sums of the conditionally
    convergent kernel series sum_n f(n) n^{nu/2} I_n.

    Integrals are evaluated in batches sharing one t-grid.  The window
    must cover the slowest endpoint oscillation (quasi-period
    ~ sqrt(n q / alpha) terms near the truncation), and averaging the
    running window means once more suppresses the leftover oscillation
    quadratically.
    """
    n_terms = min(VORONOI_KERNEL_TERMS, _kernel_term_cap())
    coef = coefficient_array(spec, n_terms)[1:]
    ns = np.arange(1, n_terms + 1, dtype=float)
    terms = np.zeros(n_terms, dtype=complex)
    block = 512
    for lo in range(0, n_terms, block):
        hi = min(lo + block, n_terms)
        mask = coef[lo:hi] != 0
        if not mask.any():
            continue
        cs = kernel_scale * np.sqrt(ns[lo:hi][mask])
        ints = oscillatory_kernel_integrals(f, alpha, beta, nu, cs, t_exp, variant)
        vals = np.zeros(hi - lo, dtype=complex)
        vals[mask] = coef[lo:hi][mask] * ns[lo:hi][mask] ** (nu / 2.0) * ints
        terms[lo:hi] = vals
    partials = np.cumsum(terms)
    w = VORONOI_WINDOW
    means = np.convolve(partials, np.full(w, 1.0 / w), mode="valid")
    return complex(means[-w:].mean()), n_terms


def _kernel_term_cap() -> int:
    return int(os.environ.get("TBL_MAX_TERMS", VORONOI_KERNEL_TERMS))


def _voronoi_single(case, tol, parity: str, *, bar_side: bool, over_j: bool,
                    variant: str, series_pref: complex):
    """Common assembly of the four single-character summation formulas.

    bar_side selects which twist carries the finite sum (and with it the
    q^{1 -+ nu/2} prefactor, the L(1 -+ nu) main term and the opposite
    twist in the kernel series).
    """
    chi = _get_char(case.q, case.char_index, case.theorem)
    if parity == "even":
        _req_even_primitive(chi, "chi")
    else:
        _req_odd_primitive(chi, "chi")
    nu, alpha, beta, f = _req_voronoi(case)
    q = case.q
    pref = q ** (1.0 - nu / 2.0 if bar_side else 1.0 + nu / 2.0) / _tau(chi)
    lhs_kind, ser_kind = (BAR_TWISTED, TWISTED) if bar_side else (TWISTED, BAR_TWISTED)
    fin, n_j = _finite_side(f, alpha, beta, DivisorSumSpec(lhs_kind, -nu, chi), over_j)
    lhs = pref * fin

    main_power = (-nu if bar_side else 0.0) - (1.0 if over_j else 0.0)
    lmain = dirichlet_L(1.0 - nu if bar_side else 1.0 + nu, chi)
    main = adaptive_integral(
        lambda t: float(f(np.array([t]))[0]) * t ** main_power,
        QuadratureSpec(alpha, beta, tol=1e-11))
    kern, n_terms = _kernel_expansion(
        f, alpha, beta, nu, DivisorSumSpec(ser_kind, -nu, chi.conjugate()),
        4.0 * PI / math.sqrt(q), -nu / 2.0 - (1.0 if over_j else 0.0), variant)
    rhs = pref * lmain * main + series_pref * kern
    return lhs, rhs, n_j, n_terms


def _t4_1(case, tol):
    return _voronoi_single(case, tol, "even", bar_side=True, over_j=False,
                           variant="even-cos", series_pref=TWO_PI)


def _t4_2(case, tol):
    return _voronoi_single(case, tol, "even", bar_side=False, over_j=False,
                           variant="even-cos", series_pref=TWO_PI)


def _t4_3(case, tol):
    return _voronoi_single(case, tol, "odd", bar_side=True, over_j=True,
                           variant="odd-sin", series_pref=-2j * PI)


def _t4_4(case, tol):
    return _voronoi_single(case, tol, "odd", bar_side=False, over_j=False,
                           variant="plus-y-sin", series_pref=2j * PI)


def _voronoi_two(case, tol, parity1, parity2, variant, series_pref, over_j):
    chi1 = _get_char(case.p, case.char_index, case.theorem + " (chi1)")
    chi2 = _get_char(case.q, case.char2_index, case.theorem + " (chi2)")
    for chi, parity, name in ((chi1, parity1, "chi1"), (chi2, parity2, "chi2")):
        if parity == "even":
            _req_even_primitive(chi, name)
        else:
            _req_odd_primitive(chi, name)
    nu, alpha, beta, f = _req_voronoi(case)
    p, q = case.p, case.q
    pref = p ** (1.0 - nu / 2.0) * q ** (1.0 + nu / 2.0) / (_tau(chi1) * _tau(chi2))
    fin, n_j = _finite_side(f, alpha, beta,
                            DivisorSumSpec(TWO_CHAR, -nu, chi2, chi1), over_j)
    lhs = pref * fin
    kern, n_terms = _kernel_expansion(
        f, alpha, beta, nu,
        DivisorSumSpec(TWO_CHAR, -nu, chi1.conjugate(), chi2.conjugate()),
        4.0 * PI / math.sqrt(p * q), -nu / 2.0 - (1.0 if over_j else 0.0), variant)
    rhs = series_pref * kern
    return lhs, rhs, n_j, n_terms


def _t4_5(case, tol):
    return _voronoi_two(case, tol, "even", "even", "even-cos", TWO_PI, False)


def _t4_6(case, tol):
    return _voronoi_two(case, tol, "odd", "odd", "plus-y-cos", -TWO_PI, True)


def _t4_7(case, tol):
    return _voronoi_two(case, tol, "even", "odd", "plus-y-sin", 2j * PI, False)


def _t4_8(case, tol):
    return _voronoi_two(case, tol, "odd", "even", "odd-sin", -2j * PI, True)


def _voronoi_equal(case, tol, parity):
    chi = _get_char(case.q, case.char_index, case.theorem)
    if parity == "even":
        _req_even_primitive(chi, "chi")
        variant, series_pref, over_j = "even-cos", TWO_PI, False
    else:
        _req_odd_primitive(chi, "chi")
        variant, series_pref, over_j = "plus-y-cos", -TWO_PI, True
    nu, alpha, beta, f = _req_voronoi(case)
    q = case.q
    fin, n_j = _finite_side(f, alpha, beta,
                            DivisorSumSpec(TWO_CHAR, -nu, chi, chi), over_j)
    lhs = q * q / _tau(chi) ** 2 * fin
    cb = chi.conjugate()
    kern, n_terms = _kernel_expansion(
        f, alpha, beta, nu, DivisorSumSpec(TWO_CHAR, -nu, cb, cb),
        4.0 * PI / q, -nu / 2.0 - (1.0 if over_j else 0.0), variant)
    rhs = series_pref * kern
    return lhs, rhs, n_j, n_terms


def _c4_1(case, tol):
    return _voronoi_equal(case, tol, "even")


def _c4_2(case, tol):
    return _voronoi_equal(case, tol, "odd")


# ========================== registry and driver ==========================


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    section: str
    description: str
    evaluate: Callable
    points: tuple[dict, ...]


def _pts(*dicts) -> tuple[dict, ...]:
    return tuple(dicts)


_COHEN_GRID = tuple((nuv, Nv) for nuv in (0.25, 0.3, 0.45) for Nv in (1, 2))


def _cohen_points(base: dict) -> tuple[dict, ...]:
    return tuple(dict(base, nu=nuv, N=Nv) for nuv, Nv in _COHEN_GRID)


def _voronoi_points(base: dict) -> tuple[dict, ...]:
    out = []
    for fn in ("exp", "t2", "gauss"):
        for (al, be) in ((0.5, 3.4), (1.3, 5.7)):
            out.append(dict(base, nu=0.25, alpha=al, beta=be, f=fn))
    return tuple(out)


THEOREMS: dict[str, TheoremEntry] = {}


def _register(tid, section, description, evaluate, points):
    THEOREMS[tid] = TheoremEntry(tid, section, description, evaluate, points)


_register("T2_1", "sec2",
          "weight-k series, odd chi, even k >= 0, nu > 0: shifted-power tail",
          _t2_1, _pts(
              dict(q=4, char_index=1, k=0, nu=0.6, a=1.0, x=0.75),
              dict(q=3, char_index=1, k=2, nu=0.25, a=1.0, x=0.3),
              dict(q=5, char_index=1, k=2, nu=1.3, a=2.0, x=1.9),
              dict(q=7, char_index=3, k=4, nu=0.5, a=2.0, x=0.3)))
_register("T2_2", "sec2",
          "weight-k series, odd chi, even k >= 0, nu = 0: difference tail",
          _t2_2, _pts(
              dict(q=4, char_index=1, k=0, a=1.0, x=0.3),
              dict(q=3, char_index=1, k=2, a=0.5, x=1.9),
              dict(q=7, char_index=3, k=4, a=2.0, x=0.75),
              dict(q=5, char_index=3, k=6, a=2.0, x=1.9)))
_register("T2_3", "sec2",
          "bar-twist series, odd chi, even k >= 2, nu > 0",
          _t2_3, _pts(
              dict(q=4, char_index=1, k=2, nu=0.25, a=1.0, x=0.75),
              dict(q=3, char_index=1, k=2, nu=0.7, a=0.5, x=1.9),
              dict(q=5, char_index=1, k=4, nu=1.0, a=2.0, x=0.3)))
_register("T2_4", "sec2",
          "bar-twist series, odd chi, even k >= 2, nu = 0",
          _t2_4, _pts(
              dict(q=4, char_index=1, k=2, a=1.0, x=0.3),
              dict(q=3, char_index=1, k=4, a=1.0, x=0.75),
              dict(q=7, char_index=3, k=6, a=2.0, x=1.9)))
_register("T2_5", "sec2",
          "weight-k series, even chi, odd k >= 1, nu > 0",
          _t2_5, _pts(
              dict(q=5, char_index=2, k=1, nu=0.6, a=1.0, x=0.75),
              dict(q=8, char_index=1, k=3, nu=0.25, a=1.0, x=0.3),
              dict(q=7, char_index=2, k=5, nu=1.3, a=2.0, x=1.9),
              dict(q=7, char_index=4, k=1, nu=0.5, a=0.5, x=0.75)))
_register("T2_6", "sec2",
          "weight-k series, even chi, odd k >= 1, nu = 0",
          _t2_6, _pts(
              dict(q=5, char_index=2, k=1, a=1.0, x=0.3),
              dict(q=8, char_index=1, k=3, a=0.5, x=1.9),
              dict(q=7, char_index=2, k=5, a=2.0, x=0.75)))
_register("T2_7", "sec2",
          "bar-twist series, even chi, odd k >= 1, nu > 0",
          _t2_7, _pts(
              dict(q=5, char_index=2, k=1, nu=0.25, a=1.0, x=0.75),
              dict(q=8, char_index=1, k=3, nu=0.7, a=2.0, x=0.3),
              dict(q=7, char_index=4, k=5, nu=0.5, a=2.0, x=1.9)))
_register("T2_8", "sec2",
          "bar-twist series, even chi, odd k >= 1, nu = 0",
          _t2_8, _pts(
              dict(q=5, char_index=2, k=1, a=1.0, x=0.75),
              dict(q=8, char_index=1, k=3, a=0.5, x=1.9),
              dict(q=7, char_index=2, k=5, a=2.0, x=0.3)))
_register("T2_9", "sec2",
          "two odd characters, k = 0, nu = 0: log kernel over n(n^2-c^2)",
          _t2_9, _pts(
              dict(p=3, char_index=1, q=4, char2_index=1, a=1.0, x=0.75),
              dict(p=3, char_index=1, q=5, char2_index=1, a=0.5, x=1.9),
              dict(p=4, char_index=1, q=7, char2_index=3, a=1.0, x=0.3)))
_register("T2_10", "sec2",
          "two matched-parity characters, odd k, nu > 0",
          _t2_10, _pts(
              dict(p=5, char_index=2, q=7, char2_index=2, k=1, nu=0.6, a=1.0, x=0.75),
              dict(p=3, char_index=1, q=4, char2_index=1, k=3, nu=0.25, a=1.0, x=0.3),
              dict(p=8, char_index=1, q=5, char2_index=2, k=5, nu=1.0, a=2.0, x=1.9)))
_register("T2_11", "sec2",
          "two matched-parity characters, odd k, nu = 0",
          _t2_11, _pts(
              dict(p=5, char_index=2, q=7, char2_index=2, k=1, a=1.0, x=0.3),
              dict(p=3, char_index=1, q=4, char2_index=1, k=3, a=1.0, x=1.9),
              dict(p=8, char_index=1, q=5, char2_index=2, k=5, a=2.0, x=0.75)))
_register("T2_12", "sec2",
          "two even characters, k = 0, nu = 0: log kernel over (n^2-c^2)",
          _t2_12, _pts(
              dict(p=5, char_index=2, q=8, char2_index=1, a=1.0, x=0.75),
              dict(p=5, char_index=2, q=7, char2_index=2, a=0.5, x=1.9),
              dict(p=7, char_index=2, q=7, char2_index=4, a=1.0, x=0.3)))
_register("T2_13", "sec2",
          "single even character, k = 0, nu = 0: log kernel identity",
          _t2_13, _pts(
              dict(q=5, char_index=2, a=1.0, x=0.3),
              dict(q=8, char_index=1, a=0.5, x=1.9),
              dict(q=7, char_index=2, a=1.0, x=0.75),
              dict(q=7, char_index=4, a=2.0, x=0.3)))
_register("T2_14", "sec2",
          "two mixed-parity characters, even k >= 0, nu > 0",
          _t2_14, _pts(
              dict(p=5, char_index=2, q=4, char2_index=1, k=0, nu=0.6, a=1.0, x=0.75),
              dict(p=3, char_index=1, q=5, char2_index=2, k=2, nu=0.25, a=1.0, x=0.3),
              dict(p=8, char_index=3, q=7, char2_index=2, k=4, nu=1.0, a=2.0, x=1.9)))
_register("T2_15", "sec2",
          "two mixed-parity characters, even k >= 0, nu = 0",
          _t2_15, _pts(
              dict(p=5, char_index=2, q=4, char2_index=1, k=0, a=1.0, x=0.3),
              dict(p=3, char_index=1, q=5, char2_index=2, k=2, a=1.0, x=1.9),
              dict(p=8, char_index=1, q=3, char2_index=1, k=4, a=2.0, x=0.75)))
_register("C2_1", "sec2",
          "equal characters: chi(n) sigma_k(n) series, odd k, nu > 0",
          _c2_1, _pts(
              dict(q=5, char_index=2, k=1, nu=0.6, a=1.0, x=0.75),
              dict(q=4, char_index=1, k=3, nu=0.25, a=1.0, x=0.3),
              dict(q=7, char_index=3, k=1, nu=1.3, a=2.0, x=1.9)))
_register("C2_2", "sec2",
          "equal characters: chi(n) sigma_k(n) series, odd k, nu = 0",
          _c2_2, _pts(
              dict(q=5, char_index=2, k=1, a=1.0, x=0.3),
              dict(q=4, char_index=1, k=3, a=1.0, x=1.9),
              dict(q=7, char_index=3, k=5, a=2.0, x=0.75)))
_register("P1_1", "classical",
          "character-free weight -nu identity with rational Cohen tail",
          _p1_1, _pts(
              dict(nu=0.25, N=1, x=0.3),
              dict(nu=0.3, N=2, x=0.75),
              dict(nu=1.3, N=2, x=1.9),
              dict(nu=2.5, N=2, x=0.45)))
_register("T3_1", "cohen",
          "weight -nu series, even chi: zeta * L head and rational tail",
          _t3_1, _cohen_points(dict(q=5, char_index=2, x=0.21)))
_register("T3_2", "cohen",
          "bar-twist weight -nu series, even chi",
          _t3_2, _cohen_points(dict(q=5, char_index=2, x=0.21)))
_register("T3_3", "cohen",
          "weight -nu series, odd chi",
          _t3_3, _cohen_points(dict(q=5, char_index=1, x=0.21)))
_register("T3_4", "cohen",
          "bar-twist weight -nu series, odd chi",
          _t3_4, _cohen_points(dict(q=3, char_index=1, x=0.41)))
_register("T3_5", "cohen",
          "two even characters, weight -nu",
          _t3_5, _cohen_points(dict(p=5, char_index=2, q=7, char2_index=2, x=0.021)))
_register("T3_6", "cohen",
          "two odd characters, weight -nu",
          _t3_6, _cohen_points(dict(p=3, char_index=1, q=4, char2_index=1, x=0.11)))
_register("T3_7", "cohen",
          "even chi1 with odd chi2, weight -nu",
          _t3_7, _cohen_points(dict(p=5, char_index=2, q=4, char2_index=1, x=0.061)))
_register("T3_8", "cohen",
          "odd chi1 with even chi2, weight -nu",
          _t3_8, _cohen_points(dict(p=3, char_index=1, q=5, char2_index=2, x=0.081)))
_register("C3_1", "cohen-half",
          "nu = 1/2 exponential form, even chi, plain twist",
          _c3_1, _pts(
              dict(q=5, char_index=2, x=0.21),
              dict(q=7, char_index=2, x=0.13),
              dict(q=8, char_index=1, x=0.33)))
_register("C3_2", "cohen-half",
          "nu = 1/2 exponential form, even chi, bar twist",
          _c3_2, _pts(
              dict(q=5, char_index=2, x=0.21),
              dict(q=7, char_index=4, x=0.13),
              dict(q=8, char_index=1, x=0.33)))
_register("C3_3", "cohen-half",
          "nu = 1/2 exponential form, odd chi, plain twist",
          _c3_3, _pts(
              dict(q=5, char_index=1, x=0.21),
              dict(q=4, char_index=1, x=0.13),
              dict(q=3, char_index=1, x=0.33)))
_register("C3_4", "cohen-half",
          "nu = 1/2 exponential form, odd chi, bar twist",
          _c3_4, _pts(
              dict(q=5, char_index=1, x=0.21),
              dict(q=4, char_index=1, x=0.13),
              dict(q=3, char_index=1, x=0.33)))
_register("C3_5", "cohen",
          "equal even characters, weight -nu",
          _c3_5, tuple(dict(q=5, char_index=2, x=0.021, nu=nuv, N=Nv)
                       for nuv, Nv in ((0.25, 1), (0.3, 2), (0.45, 1))))
_register("C3_6", "cohen",
          "equal odd characters, weight -nu",
          _c3_6, tuple(dict(p=4, char_index=1, x=0.051, nu=nuv, N=Nv)
                       for nuv, Nv in ((0.25, 1), (0.3, 2), (0.45, 1))))
_register("T4_1", "voronoi",
          "summation formula, even chi, bar-twist finite sum",
          _t4_1, _voronoi_points(dict(q=5, char_index=2)))
_register("T4_2", "voronoi",
          "summation formula, even chi, plain-twist finite sum",
          _t4_2, _voronoi_points(dict(q=5, char_index=2)))
_register("T4_3", "voronoi",
          "summation formula, odd chi, bar twist over j",
          _t4_3, _voronoi_points(dict(q=5, char_index=1)))
_register("T4_4", "voronoi",
          "summation formula, odd chi, plain twist",
          _t4_4, _voronoi_points(dict(q=5, char_index=1)))
_register("T4_5", "voronoi",
          "summation formula, two even characters",
          _t4_5, _voronoi_points(dict(p=5, char_index=2, q=7, char2_index=2)))
_register("T4_6", "voronoi",
          "summation formula, two odd characters, over j",
          _t4_6, _voronoi_points(dict(p=3, char_index=1, q=4, char2_index=1)))
_register("T4_7", "voronoi",
          "summation formula, even chi1 with odd chi2",
          _t4_7, _voronoi_points(dict(p=5, char_index=2, q=4, char2_index=1)))
_register("T4_8", "voronoi",
          "summation formula, odd chi1 with even chi2",
          _t4_8, _voronoi_points(dict(p=4, char_index=1, q=5, char2_index=2)))
_register("C4_1", "voronoi",
          "equal even characters summation formula",
          _c4_1, _pts(
              dict(q=5, char_index=2, nu=0.25, alpha=0.5, beta=3.4, f="exp"),
              dict(q=5, char_index=2, nu=0.25, alpha=1.3, beta=5.7, f="t2")))
_register("C4_2", "voronoi",
          "equal odd characters summation formula",
          _c4_2, _pts(
              dict(q=5, char_index=1, nu=0.25, alpha=0.5, beta=3.4, f="exp"),
              dict(q=3, char_index=1, nu=0.25, alpha=1.3, beta=5.7, f="gauss")))


def verify(case: IdentityCase, tol: float | None = None) -> VerificationReport:
    """Verify one identity instance and report the residual."""
    entry = THEOREMS.get(case.theorem)
    if entry is None:
        raise DomainError(
            f"unknown theorem id {case.theorem!r}; valid ids: {', '.join(sorted(THEOREMS))}")
    if tol is None:
        tol = DEFAULT_TOLERANCES[entry.section]
    t0 = time.perf_counter()
    lhs, rhs, lterms, rterms = entry.evaluate(case, tol)
    wall = (time.perf_counter() - t0) * 1000.0
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(lhs) if lhs != 0 else math.inf
    cutoff = _ABS_CUTOFF.get(entry.section, _ABS_CUTOFF_DEFAULT)
    err = abs_err if abs(lhs) < cutoff else rel_err
    return VerificationReport(case, lhs, rhs, abs_err, rel_err,
                              lterms, rterms, bool(err <= tol), tol, wall)


def default_cases(selector=None) -> list[IdentityCase]:
    """All registered default parameter points, optionally filtered.

    selector: None or 'all' for everything, a prefix string ('T3'), or an
    iterable of theorem ids.
    """
    if selector is None or selector == "all":
        wanted = list(THEOREMS)
    elif isinstance(selector, str):
        wanted = [tid for tid in THEOREMS if tid.startswith(selector)]
    else:
        wanted = [tid for tid in selector]
        for tid in wanted:
            if tid not in THEOREMS:
                raise DomainError(
                    f"unknown theorem id {tid!r}; valid ids: {', '.join(sorted(THEOREMS))}")
    out = []
    for tid in wanted:
        for point in THEOREMS[tid].points:
            out.append(IdentityCase(theorem=tid, **point))
    return out


def _verify_for_pool(args):
    case, tol = args
    return verify(case, tol)


def run_suite(selector=None, tol_profile: dict | None = None,
              workers: int = 1) -> list[VerificationReport]:
    """Verify every registered case matching the selector.

    Individual failures are reported, not raised.  Results keep the
    deterministic registry ordering regardless of worker count.
    """
    profile = dict(DEFAULT_TOLERANCES)
    if tol_profile:
        profile.update(tol_profile)
    cases = default_cases(selector)
    jobs = [(case, profile[THEOREMS[case.theorem].section]) for case in cases]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_for_pool, jobs))
    return [_verify_for_pool(job) for job in jobs]


def positivity_scan(q_max: int) -> list[tuple[int, int, float]]:
    """(q, index, L(1, chi)) for every real primitive non-principal chi
    with modulus up to q_max."""
    if q_max < 3:
        raise DomainError("positivity scan needs q_max >= 3")
    out = []
    for q in range(3, q_max + 1):
        for chi in enumerate_characters(q):
            if chi.is_real and chi.is_primitive and not chi.is_principal:
                out.append((q, chi.index, dirichlet_L(1.0, chi).real))
    return out


def report_record(report: VerificationReport) -> dict:
    return {
        "theorem_id": report.case.theorem,
        "params": report.case.params(),
        "lhs_re": report.lhs.real,
        "lhs_im": report.lhs.imag,
        "rhs_re": report.rhs.real,
        "rhs_im": report.rhs.imag,
        "abs_err": report.abs_err,
        "rel_err": report.rel_err,
        "pass": report.passed,
        "terms": report.lhs_terms + report.rhs_terms,
        "wall_ms": report.wall_ms,
    }


def write_reports(reports: list[VerificationReport], path: str,
                  fmt: str = "jsonl") -> None:
    """Serialize reports: 'jsonl' for one record per line, 'json' for a
    single document."""
    records = [report_record(r) for r in reports]
    with open(path, "w", encoding="utf-8") as fh:
        if fmt == "jsonl":
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        elif fmt == "json":
            json.dump({"reports": records}, fh, sort_keys=True, indent=1)
            fh.write("\n")
        else:
            raise DomainError(f"unknown report format {fmt!r}")
