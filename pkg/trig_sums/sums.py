# trig_sums/sums.py
"""
Certified evaluation of the cosecant and cotangent sums

    I_p = sum_{k=1}^{p-1} csc(k pi/p)            J_p = sum_{k=1}^{p-1} k cot(k pi/p)
    K_p = sum_{k=1}^{p-1} tan(k pi/(2p))         Ktilde_p = sum_{k=1}^{p-1} cot(k pi/(2p))
    L_p = sum_{k=1}^{p-1} k csc(k pi/p)          M_p = sum_{k=0}^{p-1} (2k+1) cot((2k+1) pi/(2p))

and the identities tying them together. Angles are built as (num/den) pi
from the exact fraction, and a cotangent at exactly pi/2 contributes 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from mpmath import iv, mp

from analytic_core.precision import lower, midpoint, precision, upper, width
from core.exceptions import IdentityViolation, InvalidArgument

logger = logging.getLogger(__name__)

TRIG_KINDS = ('I', 'J', 'K', 'Ktilde', 'L', 'M')
IDENTITY_ULPS = 8


@dataclass
class TrigSumValue:
    kind: str
    p: int
    value: object

    def as_dict(self, digits: int = 30) -> dict:
        return {
            'kind': self.kind,
            'p': self.p,
            'value': mp.nstr(midpoint(self.value), digits),
            'lower': mp.nstr(lower(self.value), digits),
            'upper': mp.nstr(upper(self.value), digits),
        }


def _angle(num: int, den: int):
    return iv.pi * num / den


def _csc(num: int, den: int):
    return 1 / iv.sin(_angle(num, den))


def _cot(num: int, den: int):
    if 2 * num == den:
        return iv.mpf(0)
    x = _angle(num, den)
    return iv.cos(x) / iv.sin(x)


def _tan(num: int, den: int):
    return iv.tan(_angle(num, den))


def csc_sum(p: int, paired: bool = True):
    """I_p; paired sums csc(k pi/p) + csc((p-k) pi/p) = 2 csc(k pi/p) over k < p/2."""
    total = iv.mpf(0)
    if not paired:
        for k in range(1, p):
            total += _csc(k, p)
        return total
    for k in range(1, (p + 1) // 2):
        total += 2 * _csc(k, p)
    if p % 2 == 0 and p > 1:
        total += 1
    return total


def cot_sum(p: int):
    """J_p, paired as (2k - p) cot(k pi/p) over k < p/2."""
    total = iv.mpf(0)
    for k in range(1, (p + 1) // 2):
        total += (2 * k - p) * _cot(k, p)
    return total


def _tan_sum(p: int):
    total = iv.mpf(0)
    for k in range(1, p):
        total += _tan(k, 2 * p)
    return total


def _half_cot_sum(p: int):
    total = iv.mpf(0)
    for k in range(1, p):
        total += _cot(k, 2 * p)
    return total


def _weighted_csc_sum(p: int):
    total = iv.mpf(0)
    for k in range(1, p):
        total += k * _csc(k, p)
    return total


def _odd_cot_sum(p: int):
    total = iv.mpf(0)
    for k in range(p):
        total += (2 * k + 1) * _cot(2 * k + 1, 2 * p)
    return total


_EVALUATORS = {
    'I': csc_sum,
    'J': cot_sum,
    'K': _tan_sum,
    'Ktilde': _half_cot_sum,
    'L': _weighted_csc_sum,
    'M': _odd_cot_sum,
}


def trig_sum(kind: str, p: int, prec: int | None = None) -> TrigSumValue:
    """Enclosure of one of I, J, K, Ktilde, L, M at p. Empty sums are exactly 0."""
    if kind not in _EVALUATORS:
        raise InvalidArgument(f"Unknown trigonometric sum {kind!r}", known=', '.join(TRIG_KINDS))
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    with precision(prec):
        return TrigSumValue(kind=kind, p=p, value=_EVALUATORS[kind](p))


def agree(relation: str, left, right, bits: int, terms: int = 1, slack_ulps: int = IDENTITY_ULPS):
    """
    Check that two enclosures of the same quantity overlap up to `slack_ulps`
    ulps of their magnitude per summed term. Each enclosure must itself be
    no wider than that tolerance. Returns left - right.
    """
    residual = left - right
    scale = max(mp.one, abs(upper(left)), abs(lower(left)))
    slack = slack_ulps * max(terms, 1) * scale * mp.ldexp(1, -bits)
    widest = max(width(left), width(right))
    if widest > slack:
        logger.error(f"{relation}: enclosure width {mp.nstr(widest, 5)} exceeds the tolerance")
        raise IdentityViolation(f"{relation} cannot be decided to {slack_ulps} ulps per term",
                                relation=relation, width=widest, tolerance=slack)
    if lower(residual) > slack or upper(residual) < -slack:
        logger.error(f"{relation} fails: residual {residual}")
        raise IdentityViolation(f"{relation} does not hold", relation=relation,
                                lower=lower(residual), upper=upper(residual))
    return residual


def identity_suite(p: int, prec: int | None = None) -> bool:
    """
    K_p = Ktilde_p = I_p, L_p = (p/2) I_p and M_p = J_2p - 2 J_p = -p I_p.
    """
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    with precision(prec) as bits:
        i = csc_sum(p)
        j, j2 = cot_sum(p), cot_sum(2 * p)
        k, k_tilde = _tan_sum(p), _half_cot_sum(p)
        weighted, odd = _weighted_csc_sum(p), _odd_cot_sum(p)
        agree(f"K_{p} = I_{p}", k, i, bits, terms=2 * p)
        agree(f"Ktilde_{p} = I_{p}", k_tilde, i, bits, terms=2 * p)
        agree(f"L_{p} = (p/2) I_{p}", weighted, iv.mpf(p) / 2 * i, bits, terms=2 * p)
        agree(f"M_{p} = J_{2 * p} - 2 J_{p}", odd, j2 - 2 * j, bits, terms=2 * p)
        agree(f"M_{p} = -p I_{p}", odd, -p * i, bits, terms=2 * p)
    logger.debug(f"trigonometric identities hold at p={p}")
    return True


def csc_pairing_check(p: int, prec: int | None = None):
    """The paired I_p agrees with the plain forward sum to 2 ulps per evaluation and per addition."""
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    with precision(prec) as bits:
        return agree(f"paired I_{p}", csc_sum(p, paired=True), csc_sum(p, paired=False), bits,
                     terms=2 * p, slack_ulps=2)
