# wzcert/services.py
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from padic.exceptions import OutOfRange

from .certificates import CERTIFICATES, Certificate

logger = logging.getLogger(__name__)


class Outcome(Enum):
    """Result of an exact certificate check"""
    PASS = 'Pass'
    FAIL = 'Fail'
    POLE = 'Pole'


@dataclass(frozen=True)
class CertificateResult:
    certificate: str
    a: Fraction
    outcome: Outcome
    k: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def as_dict(self):
        return {
            'cert': self.certificate,
            'a': str(self.a),
            'outcome': self.outcome.value,
            'k': self.k,
            'lhs': None if self.lhs is None else str(self.lhs),
            'rhs': None if self.rhs is None else str(self.rhs),
        }


def get_certificate(cert_id: str) -> Certificate:
    try:
        return CERTIFICATES[cert_id]
    except KeyError:
        raise OutOfRange(f"Unknown certificate {cert_id!r}; known: {', '.join(CERTIFICATES)}")


def _resolve(cert, a):
    if isinstance(cert, str):
        cert = get_certificate(cert)
    a = Fraction(a)
    if not cert.admissible(a):
        raise OutOfRange(f"a = {a} is excluded for {cert.id}")
    return cert, a


def verify_telescoping(cert, a, k_max: int) -> CertificateResult:
    """
    Checks the defining relation of a WZ pair at every k in [0, k_max].

    Args:
        cert: Certificate or its id
        a: Rational parameter, not one of the certificate's excluded values
        k_max: Last index checked

    Returns:
        Pass, the first failing k, or the first k where a denominator vanishes
    """
    cert, a = _resolve(cert, a)
    for k in range(k_max + 1):
        try:
            left, right = cert.relation(a, k)
        except ZeroDivisionError:
            logger.warning(f"{cert.id} has a pole at a={a}, k={k}")
            return CertificateResult(cert.id, a, Outcome.POLE, k)
        if left != right:
            logger.error(f"Error in {cert.id} telescoping at a={a}, k={k}: {left} != {right}")
            return CertificateResult(cert.id, a, Outcome.FAIL, k, left, right)
    return CertificateResult(cert.id, a, Outcome.PASS)


def verify_boundary(cert, a) -> CertificateResult:
    """Compares G(a,0), or R(a,0), with the constant the lemma's proof uses."""
    cert, a = _resolve(cert, a)
    try:
        attained, expected = cert.boundary(a)
    except ZeroDivisionError:
        logger.warning(f"{cert.id} boundary has a pole at a={a}")
        return CertificateResult(cert.id, a, Outcome.POLE, 0)
    outcome = Outcome.PASS if attained == expected else Outcome.FAIL
    return CertificateResult(cert.id, a, outcome, 0, attained, expected)


def verify_sum_identity(cert, a, n: int) -> CertificateResult:
    """
    Checks the full finite-sum equation of a lemma at (a, n) over the rationals.

    Args:
        cert: Certificate or its id
        a: Rational parameter
        n: Number of summed terms, at least 1
    """
    if n < 1:
        raise OutOfRange(f"Sum identity needs n >= 1, got {n}")
    cert, a = _resolve(cert, a)
    try:
        lhs = cert.sum_lhs(a, n)
        rhs = cert.sum_rhs(a, n)
    except ZeroDivisionError:
        logger.warning(f"{cert.id} sum identity has a pole at a={a}, n={n}")
        return CertificateResult(cert.id, a, Outcome.POLE, n)
    outcome = Outcome.PASS if lhs == rhs else Outcome.FAIL
    if outcome is Outcome.FAIL:
        logger.error(f"Error in {cert.id} sum identity at a={a}, n={n}: {lhs} != {rhs}")
    return CertificateResult(cert.id, a, outcome, n, lhs, rhs)


def tail_value(cert, a, n: int) -> Fraction:
    """F(a,n)R(a,n) or G(a,n): what the telescoped sum leaves at the top."""
    cert, a = _resolve(cert, a)
    return cert.tail(a, n)
