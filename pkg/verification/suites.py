# verification/suites.py
"""
Named verification suites. Each suite is a fixed, ordered list of checks;
every check carries a traceability tag naming the identity or bound it
exercises, so a report maps one-to-one onto the properties it covers.

A check passes when its callable returns True or a value (interval, number,
rows); it fails when it returns False or raises a BernoulliError. Any other
exception is recorded as an error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

import mpmath
from mpmath import iv, mp

from analytic_core.dilcher import dilcher_check, normalized_convergence_check
from analytic_core.norms import (
    alpha_bisection_check,
    alpha_monotone_check,
    b2n_two_sided_bound,
    find_alpha,
    l1_norm_enclosure,
    periodic_shift_check,
    sharpness_ratio,
    sup_norm_report,
)
from analytic_core.precision import (
    contains,
    fixed_decimal,
    interval_soundness_check,
    lower,
    precision,
    setting,
    to_mpf,
    width,
)
from asymptotic_series.harmonic import (
    euler_gamma,
    gamma_bounds_table,
    harmonic_bracket_check,
    harmonic_expansion,
    harmonic_nesting_check,
)
from asymptotic_series.series import leading_terms_check, lm84_check, pr82_check, pr83_check, width_shrink_check
from core.exceptions import BernoulliError
from euler_maclaurin.integrands import corpus, get_integrand
from euler_maclaurin.summation import (
    decay_check,
    em_identity_check,
    offset_periodicity_check,
    polynomial_exactness_check,
)
from exact_core.bernoulli import bernoulli_number, bernoulli_polynomial
from exact_core.identities import (
    addition_formula,
    binomial_sum_formula,
    convolution_identity_check,
    defining_conditions_check,
    derivative_check,
    doubling_recurrence,
    gould_formula,
    half_value_check,
    l2_inner_product,
    multiplication_formula_check,
    power_sum,
    power_sum_polynomial,
    quadratic_recurrence_check,
    raabe_check,
    reconstruct_monomial,
    reflection_check,
    sign_rule_check,
)
from exact_core.number_theory import (
    bernoulli_denominator_check,
    integrality_von5,
    tangent_integrality,
    von_staudt_clausen,
)
from exact_core.polynomial import RatPolynomial
from quadrature.expansions import LIMIT_RULES, measured_order_check, order_limit_check, trapezoid_monotone_remainder
from quadrature.romberg import romberg_expansion_check, romberg_recurrence_check, romberg_single_panel_check
from quadrature.rules import RuleId, RuleKind, exactness_degree_check, gauss_alpha_residual, simpson_identity_check
from trig_sums.expansions import (
    I_expansion_check,
    I_sweep,
    J_expansion_check,
    J_sweep,
    asymptotic_ratio,
    cor94_bracket,
    cor97_bracket,
    pr72_expansion_check,
    rm98_identity_suite,
)
from trig_sums.sums import csc_pairing_check, identity_suite

logger = logging.getLogger(__name__)

SUITE_NAMES = ('core', 'vonstaudt', 'analytic', 'em', 'quadrature', 'series', 'trig')
ALL_SUITES = 'all'

PASSED, FAILED, ERROR = 'passed', 'failed', 'error'

TABLE_1 = [Fraction(1), Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66)]
TABLE_2 = ['1', 'X - 1/2', 'X^2 - X + 1/6', 'X^3 - 3/2*X^2 + 1/2*X', 'X^4 - 2*X^3 + X^2 - 1/30',
           'X^5 - 5/2*X^4 + 5/3*X^3 - 1/6*X', 'X^6 - 3*X^5 + 5/2*X^4 - 1/2*X^2 + 1/42']
EXACTNESS_RULES = [RuleId(RuleKind.MIDPOINT), RuleId(RuleKind.TRAPEZOID), RuleId(RuleKind.SIMPSON),
                   RuleId(RuleKind.GAUSS2)] + [RuleId(RuleKind.ROMBERG, level) for level in range(5)]

GAMMA_BOUNDS_TABLE = {
    1: ('0.5750000000', '0.5833333333'),
    2: ('0.5771653194', '0.5776861528'),
    4: ('0.5772147535', '0.5772473055'),
    8: ('0.5772156500', '0.5772176845'),
    16: ('0.5772156647', '0.5772157918'),
    32: ('0.5772156649', '0.5772156728'),
    64: ('0.5772156649', '0.5772156654'),
    128: ('0.5772156649', '0.5772156649'),
}


@dataclass
class SuiteOptions:
    """Budgets; None picks the full or fast default of each check."""
    fast: bool = False
    max_n: int | None = None
    max_p: int | None = None
    prec: int | None = None

    def n_limit(self, full: int, fast: int) -> int:
        if self.max_n is not None:
            return self.max_n
        return fast if self.fast else full

    def p_limit(self, full: int, fast: int) -> int:
        if self.max_p is not None:
            return self.max_p
        return fast if self.fast else full

    def as_dict(self) -> dict:
        return {'fast': self.fast, 'max_n': self.max_n, 'max_p': self.max_p, 'prec': self.prec}


@dataclass
class Check:
    name: str
    tag: str
    run: Callable[[], object]


@dataclass
class CheckResult:
    name: str
    tag: str
    status: str
    margin: str | None = None
    detail: str = ''

    def as_dict(self) -> dict:
        row = {'name': self.name, 'tag': self.tag, 'status': self.status, 'margin': self.margin}
        if self.detail:
            row['detail'] = self.detail
        return row


@dataclass
class SuiteReport:
    suite: str
    results: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for result in self.results if result.status != PASSED)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def traceability(self) -> dict:
        tags = {}
        for result in self.results:
            tags.setdefault(result.tag, []).append(result.name)
        return tags

    def as_dict(self) -> dict:
        return {
            'suite': self.suite,
            'passed': self.passed,
            'failures': self.failures,
            'checks': [result.as_dict() for result in self.results],
        }


def _margin(value) -> str | None:
    if value is None or isinstance(value, bool):
        return None
    if isinstance(value, iv.mpf):
        return mp.nstr(lower(value), 6)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (mp.mpf, int)):
        return mp.nstr(mp.mpf(value), 6)
    if isinstance(value, list) and value and isinstance(value[0], dict) and 'margin' in value[0]:
        return min((row['margin'] for row in value), key=lambda text: mp.mpf(text))
    if hasattr(value, 'margin'):
        return _margin(value.margin)
    return None


def run_check(check: Check) -> CheckResult:
    try:
        value = check.run()
    except BernoulliError as exc:
        logger.error(f"{check.name} failed: {exc.detail}")
        return CheckResult(check.name, check.tag, FAILED, detail=exc.detail)
    except Exception as exc:
        logger.exception(f"{check.name} raised")
        return CheckResult(check.name, check.tag, ERROR, detail=f"{type(exc).__name__}: {exc}")
    if value is False:
        logger.error(f"{check.name} failed")
        return CheckResult(check.name, check.tag, FAILED)
    return CheckResult(check.name, check.tag, PASSED, margin=_margin(value))


def _every(fn, values) -> bool:
    return all(fn(value) for value in values)


def _oracle(n: int) -> Fraction:
    p, q = mpmath.bernfrac(n)
    return Fraction(int(p), int(q))


def _power_sums() -> bool:
    for n in range(11):
        total = 0
        polynomial = power_sum_polynomial(n)
        for m in range(1, 201):
            total += m ** n
            if power_sum(n, m) != total or polynomial.evaluate(m) != total:
                return False
    return True


def _l2_norm_check(n: int) -> bool:
    value = l2_inner_product(n, n)
    return value == (-1) ** (n - 1) * bernoulli_number(2 * n) / comb(2 * n, n) and value > 0


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def core_checks(options: SuiteOptions) -> list[Check]:
    n_max = options.n_limit(30, 12)
    m_max = min(n_max, 20)
    ns = range(1, n_max + 1)
    return [
        Check("b_0, b_2, ..., b_10", 'table-1', lambda: [bernoulli_number(2 * k) for k in range(6)] == TABLE_1),
        Check("B_0 .. B_6", 'table-2', lambda: [str(bernoulli_polynomial(n)) for n in range(7)] == TABLE_2),
        Check(f"b_n against mpmath for n <= {n_max}", 'recurrence',
              lambda: _every(lambda n: bernoulli_number(n) == _oracle(n), range(n_max + 1))),
        Check(f"defining conditions n <= {n_max}", 'defining-conditions',
              lambda: _every(defining_conditions_check, range(n_max + 1))),
        Check(f"reflection n <= {n_max}", 'reflection', lambda: _every(reflection_check, ns)),
        Check(f"derivative n <= {n_max}", 'derivative', lambda: _every(derivative_check, ns)),
        Check(f"Raabe p <= 5, n <= {n_max}", 'raabe',
              lambda: all(raabe_check(n, p) for n in ns for p in range(1, 6))),
        Check(f"addition formula n <= {n_max}", 'addition',
              lambda: _every(lambda n: addition_formula(n, Fraction(2, 7)) == bernoulli_polynomial(n).shift(Fraction(2, 7)),
                             ns)),
        Check(f"monomial basis n <= {n_max}", 'monomial-basis',
              lambda: _every(lambda n: reconstruct_monomial(n) == RatPolynomial.monomial(n), range(n_max + 1))),
        Check(f"convolution identity n <= {n_max}", 'convolution', lambda: _every(convolution_identity_check, ns)),
        Check(f"multiplication formula n <= {n_max}", 'multiplication',
              lambda: _every(lambda n: multiplication_formula_check(n, Fraction(3, 2), Fraction(1, 5)), ns)),
        Check(f"half values n <= {n_max}", 'half-value', lambda: _every(half_value_check, range(n_max + 1))),
        Check(f"sign rule n <= {n_max // 2}", 'sign-rule', lambda: _every(sign_rule_check, range(1, n_max // 2 + 1))),
        Check("power sums S_n(m), n <= 10, m <= 200", 'power-sums', _power_sums),
        Check(f"L2 norms of B_n n <= {n_max}", 'l2-inner-product', lambda: _every(_l2_norm_check, ns)),
        Check(f"Gould's formula m <= {m_max}", 'gould',
              lambda: _every(lambda m: gould_formula(m) == bernoulli_number(m), range(1, m_max + 1))),
        Check(f"binomial-sum formula m <= {m_max}", 'binomial-sum',
              lambda: _every(lambda m: binomial_sum_formula(m) == bernoulli_number(m), range(1, m_max + 1))),
        Check(f"quadratic recurrence 2n <= {m_max}", 'quadratic-recurrence',
              lambda: _every(quadratic_recurrence_check, range(2, m_max // 2 + 1))),
        Check(f"doubling recurrence m <= {m_max}", 'doubling-recurrence',
              lambda: _every(lambda m: doubling_recurrence(m) == bernoulli_number(m), range(1, m_max + 1))),
    ]


def vonstaudt_checks(options: SuiteOptions) -> list[Check]:
    n_max = options.n_limit(30, 15)
    ns = range(1, n_max + 1)
    return [
        Check("integer parts for n = 1, 2", 'von-staudt-clausen',
              lambda: von_staudt_clausen(1)[1] == 1 and von_staudt_clausen(2)[1] == 1),
        Check(f"integrality n <= {n_max}", 'von-staudt-clausen', lambda: _every(von_staudt_clausen, ns)),
        Check(f"denominators n <= {n_max}", 'bernoulli-denominator', lambda: _every(bernoulli_denominator_check, ns)),
        Check("m (m^k - 1) b_k integral, m <= 10, k <= 20", 'integrality-multiplier',
              lambda: all(integrality_von5(m, k) for m in range(1, 11) for k in range(21))),
        Check(f"tangent numbers n <= {n_max}", 'tangent-integrality', lambda: _every(tangent_integrality, ns)),
    ]


def analytic_checks(options: SuiteOptions) -> list[Check]:
    prec = options.prec
    n_max = options.n_limit(20, 8)
    grid = 400 if options.fast else None

    def alpha_one():
        alpha = find_alpha(1, tol=Fraction(1, 2 ** 140), prec=256)
        with precision(256):
            exact = mp.mpf(1) / 2 - 1 / (2 * mp.sqrt(3))
            return abs(to_mpf(alpha.lo) - exact) <= to_mpf(alpha.width) + mp.ldexp(1, -200)

    small = range(1, min(n_max, 10) + 1)
    checks = [
        Check("alpha_1 = 1/2 - 1/(2 sqrt 3)", 'alpha-zero', alpha_one),
        Check(f"alpha_n increasing n <= {n_max}", 'alpha-zero',
              lambda: all(alpha_monotone_check(n, prec=prec) for n in range(1, n_max + 1))),
        Check(f"alpha_n bisection halves and stays inside its bound n <= {n_max}", 'alpha-bisection',
              lambda: [alpha_bisection_check(n, prec=prec) for n in range(1, n_max + 1)]),
        Check("interval arithmetic encloses exact rationals, 1000 cases per operation", 'interval-soundness',
              lambda: interval_soundness_check(samples=1000, prec=prec)),
        Check("B_n({x + 1}) = B_n({x}) to 1 ulp, n <= 8", 'periodicity',
              lambda: periodic_shift_check(n_max=8, samples=100, prec=prec)),
        Check(f"|b_2n| two-sided bound n <= {n_max}", 'b2n-bound',
              lambda: [b2n_two_sided_bound(n, prec=prec) for n in range(1, n_max + 1)]),
        Check("zeta(2n) ratio in [1, 2], decreasing", 'b2n-bound',
              lambda: _ratios_decrease([sharpness_ratio(n, prec=prec) for n in range(1, n_max + 1)])),
        Check(f"sup norms n <= {min(n_max, 10)}", 'sup-norm',
              lambda: [sup_norm_report(n, grid=grid, prec=prec) for n in small]),
        Check(f"L1 norms n <= {min(n_max, 10)}", 'l1-norm',
              lambda: [l1_norm_enclosure(n, prec=prec) for n in small]),
        Check(f"normalized B_2n against cos n <= {min(n_max, 10)}", 'normalized-convergence',
              lambda: [normalized_convergence_check(n, grid=grid, prec=prec) for n in small]),
    ]
    points = [0, 0.3, -0.3, complex(0.5, 0.2), complex(-0.5, 0.2)]
    checks.append(Check("Dilcher bound n <= 24", 'dilcher',
                        lambda: all(dilcher_check(n, z, prec=prec) for n in range(2, 25) for z in points)))
    return checks


def _ratios_decrease(ratios) -> bool:
    return all(1 <= r <= 2 for r in ratios) and all(a > b for a, b in zip(ratios, ratios[1:]))


def em_checks(options: SuiteOptions) -> list[Check]:
    prec = options.prec
    integrands = corpus(3 if options.fast else 6)
    p_values = (2, 4) if options.fast else (2, 4, 8, 16)
    m_values = (1, 3, 6) if options.fast else (1, 2, 3, 4, 5, 6)
    x_values = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1))

    def sweep():
        count = 0
        for f in integrands:
            for p in p_values:
                for m in m_values:
                    for x in x_values:
                        em_identity_check(f, p, m, x, prec=prec)
                        count += 1
        logger.info(f"Euler-Maclaurin sweep: {count} tuples")
        return True

    def polynomials_exact():
        for f in integrands:
            if f.polynomial is None:
                continue
            degree = f.polynomial.degree
            for p in p_values:
                for x in x_values:
                    polynomial_exactness_check(f, p, degree + 1, x, prec=prec)
                    polynomial_exactness_check(f, p, degree + 2, x, prec=prec)
        return True

    log1p = get_integrand('log1p')
    return [
        Check("identity and (8/pi)(2 pi p)^-m bound over the corpus", 'em-remainder', sweep),
        Check("E(p, m, f; 1) = E(p, m, f; 0) over the corpus", 'em-periodicity',
              lambda: all(offset_periodicity_check(f, p, m, prec=prec) is not None
                          for f in integrands for p in p_values for m in m_values)),
        Check("corrected mean exact for polynomials when m > degree", 'polynomial-exactness', polynomials_exact),
        Check("p^m E decays for exp", 'em-decay', lambda: decay_check(get_integrand('exp'), 3, prec=prec)),
        Check("signed trapezoid remainder for log(1+t)", 'trapezoid-remainder',
              lambda: trapezoid_monotone_remainder(log1p, 4, 2, prec=prec)),
    ]


def quadrature_checks(options: SuiteOptions) -> list[Check]:
    prec = options.prec
    p_list = (8, 16, 32) if options.fast else (64, 128, 256)
    exp = get_integrand('exp')
    levels = range(3) if options.fast else range(4)
    integrands = corpus(3)
    order_prec = max(prec or 256, 256)

    def measured_orders():
        for name in ('exp', 'reciprocal1p', 'log1p'):
            for kind in (RuleKind.MIDPOINT, RuleKind.TRAPEZOID, RuleKind.SIMPSON, RuleKind.GAUSS2):
                measured_order_check(RuleId(kind), get_integrand(name), prec=order_prec)
        for level in range(1, 5):
            measured_order_check(RuleId(RuleKind.ROMBERG, level), exp, prec=order_prec)
        return True

    checks = [
        Check(f"p^r error limit for {kind.value} on e^t", 'order-limit',
              lambda kind=kind: order_limit_check(RuleId(kind), exp, p_list, prec=prec))
        for kind in LIMIT_RULES
    ]
    checks += [
        Check("B_2 vanishes at the Gauss node", 'gauss-node', lambda: gauss_alpha_residual(prec) < mp.ldexp(1, -60)),
        Check("Romberg expansion bound, level <= 3", 'romberg-bound',
              lambda: all(romberg_expansion_check(f, 1, level, 2 * level + 2, prec=prec) is not None
                          for f in integrands for level in levels)),
        Check("single-panel Romberg bound, level <= 3", 'romberg-single-panel',
              lambda: all(romberg_single_panel_check(f, level, prec=prec) is not None
                          for f in integrands for level in levels)),
        Check("exactness degrees 1, 1, 3, 3 and 2l + 1 on monomials", 'exactness-degree',
              lambda: exactness_degree_check(EXACTNESS_RULES)),
        Check("Simpson = (T + 2M)/3 over the corpus", 'simpson-identity',
              lambda: all(simpson_identity_check(f, p, prec=prec) is not None
                          for f in integrands for p in (1, 2, 7, 32))),
        Check("Romberg recurrence, level <= 4", 'romberg-recurrence',
              lambda: all(romberg_recurrence_check(f, p, max_level=4, prec=prec)
                          for f in integrands for p in (1, 3))),
        Check("measured orders within 0.1 of 2, 2, 4, 4 and 2l + 2", 'measured-order', measured_orders),
    ]
    return checks


def series_checks(options: SuiteOptions) -> list[Check]:
    prec = options.prec
    n_max = 10 if options.fast else 50
    m_max = 3 if options.fast else 6
    p_max = 4 if options.fast else 16
    e_max = 4 if options.fast else 8

    def gamma_enclosure():
        with precision(128):
            enclosure = euler_gamma(100)
            return width(enclosure) <= mp.ldexp(1, -96) and contains(enclosure, +mp.euler)

    def table():
        rows = gamma_bounds_table(list(GAMMA_BOUNDS_TABLE), prec=prec)
        with precision(prec):
            for row in rows:
                printed = (fixed_decimal(row['lower']), fixed_decimal(row['upper']))
                if printed != GAMMA_BOUNDS_TABLE[row['n']]:
                    logger.error(f"gamma bounds row n={row['n']} reads {printed}")
                    return False
                if not row['lower'] < mp.euler < row['upper']:
                    return False
        return True

    return [
        Check("gamma enclosure at 100 bits", 'euler-gamma', gamma_enclosure),
        Check("gamma bounds n = 1 .. 128", 'gamma-table', table),
        Check(f"harmonic sandwich n <= {n_max}, m <= {m_max}", 'harmonic-sandwich',
              lambda: all(harmonic_expansion(n, m, prec=prec) for n in range(1, n_max + 1)
                          for m in range(1, m_max + 1))),
        Check("adjacent truncations bracket H_n", 'harmonic-sandwich',
              lambda: all(harmonic_bracket_check(n, m, prec=prec) is not None for n in (1, 5, 20) for m in (1, 2, 3))),
        Check("nested truncation brackets n = 10, 20, m <= 6", 'harmonic-nested',
              lambda: all(harmonic_nesting_check(n, 6, prec=prec) for n in (10, 20))),
        Check("doubling the term budget at p = 2 shrinks C, D, E widths 1.9x", 'series-width',
              lambda: all(width_shrink_check(kind, p=2, prec=prec) for kind in ('C', 'D', 'E'))),
        Check(f"C_p expansion p <= {p_max}, m <= 3", 'c-series-expansion',
              lambda: all(pr82_check(p, m, prec=prec) is not None for p in range(2, p_max + 1) for m in (1, 2, 3))),
        Check(f"D_p expansion p <= {p_max}, m <= 3", 'd-series-expansion',
              lambda: all(pr83_check(p, m, prec=prec) is not None for p in range(2, p_max + 1) for m in (1, 2, 3))),
        Check(f"E_p identity p <= {e_max}", 'e-series-identity',
              lambda: all(lm84_check(p, prec=prec) is not None for p in range(1, e_max + 1))),
        Check("C_p leading terms p = 10", 'c-series-expansion', lambda: leading_terms_check(10, prec=prec)),
    ]


def trig_checks(options: SuiteOptions) -> list[Check]:
    prec = options.prec
    sweep_prec = setting('SWEEP_PREC')
    i_max = options.p_limit(int(setting('TRIG_FULL_MAX_P')), int(setting('TRIG_FAST_MAX_P')))
    j_max = min(i_max, 1000)
    identity_max = 64 if options.fast else 512
    bracket_max = 32 if options.fast else 256
    ratio_p = 10 ** 4 if options.fast else 10 ** 5
    return [
        Check(f"K, Ktilde, L, M identities p <= {identity_max}", 'trig-identities',
              lambda: all(identity_suite(p, prec=prec) for p in range(2, identity_max + 1))),
        Check(f"paired I_p against the forward sum p <= {identity_max}", 'csc-pairing',
              lambda: all(csc_pairing_check(p, prec=prec) is not None for p in range(1, identity_max + 1))),
        Check(f"I_p / (2p ln p / pi) within 5% at p = {ratio_p}", 'asymptotic-ratio',
              lambda: abs(asymptotic_ratio(ratio_p, prec=sweep_prec) - 1) < mp.mpf('0.05')),
        Check(f"I_p n = 0 bracket p <= {i_max}", 'csc-sum-bracket',
              lambda: I_sweep(i_max, prec=sweep_prec)),
        Check(f"J_p n = 0 bracket p <= {j_max}", 'cot-sum-bracket',
              lambda: J_sweep(j_max, prec=sweep_prec)),
        Check(f"I_p and J_p brackets n = 1, 2, p <= {bracket_max}", 'alternating-brackets',
              lambda: all(cor94_bracket(p, n, prec=sweep_prec) and cor97_bracket(p, n, prec=sweep_prec)
                          for n in (1, 2) for p in range(4, bracket_max + 1))),
        Check("I_p expansion witnesses", 'csc-sum-expansion',
              lambda: I_expansion_check(5, 1, prec=prec) is not None and I_expansion_check(16, 2, prec=prec) is not None),
        Check("J_p expansion witnesses", 'cot-sum-expansion',
              lambda: J_expansion_check(5, 1, prec=prec) is not None and J_expansion_check(32, 3, prec=prec) is not None),
        Check("J_p via H_p", 'cot-sum-harmonic-expansion',
              lambda: pr72_expansion_check(4, 1, prec=prec) is not None and pr72_expansion_check(10, 2, prec=prec) is not None),
        Check("series against trigonometric sums p = 1, 3, 8", 'series-trig-links',
              lambda: all(rm98_identity_suite(p, prec=prec) for p in (1, 3, 8))),
    ]


SUITES = {
    'core': core_checks,
    'vonstaudt': vonstaudt_checks,
    'analytic': analytic_checks,
    'em': em_checks,
    'quadrature': quadrature_checks,
    'series': series_checks,
    'trig': trig_checks,
}


def suite_checks(name: str, options: SuiteOptions) -> list[Check]:
    if name == ALL_SUITES:
        return [check for suite in SUITE_NAMES for check in SUITES[suite](options)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](options)


def run_suite(name: str, options: SuiteOptions | None = None) -> SuiteReport:
    """Run every check of the suite in order and collect the results."""
    options = options or SuiteOptions()
    report = SuiteReport(suite=name)
    for check in suite_checks(name, options):
        report.results.append(run_check(check))
    logger.info(f"suite {name}: {len(report.results) - report.failures}/{len(report.results)} passed")
    return report
