# quadform/services.py
import logging
from dataclasses import dataclass
from math import isqrt

from padic.exceptions import NoRepresentation

from .utils.sqrt import prime_mod_sqrt

logger = logging.getLogger(__name__)

SUPPORTED_FORMS = (2, 3, 4, 7)

# residue classes of p for which p = x^2 + d*y^2 is solvable
FORM_CLASSES = {
    2: (8, (1, 3)),
    3: (3, (1,)),
    4: (4, (1,)),
    7: (7, (1, 2, 4)),
}


@dataclass(frozen=True)
class QuadRep:
    """p = x^2 + d*y^2, or 4p = x^2 + 27*y^2 when scaled"""
    p: int
    d: int
    x: int
    y: int
    scaled: bool = False

    @property
    def x2(self) -> int:
        return self.x * self.x

    @property
    def y2(self) -> int:
        return self.y * self.y

    def as_dict(self):
        return {'d': self.d, 'x': self.x, 'y': self.y, 'scaled': self.scaled}


def is_represented(p: int, d: int) -> bool:
    """Residue-class criterion for p = x^2 + d*y^2 with x, y > 0."""
    modulus, classes = FORM_CLASSES[d]
    return p % modulus in classes and p > d


def cornacchia(d: int, p: int):
    """
    Cornacchia descent for x^2 + d*y^2 = p.

    Returns:
        (x, y) with x, y > 0, or None when the descent does not end on a square
    """
    roots = prime_mod_sqrt(-d, p)
    if not roots:
        return None
    # Choose the larger square root
    x0 = max(roots)
    a, b = p, x0
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    remainder = p - b * b
    if remainder <= 0 or remainder % d != 0:
        return None
    c = remainder // d
    t = isqrt(c)
    if t * t != c or b == 0:
        return None
    return b, t


def exhaustive_search(p: int, d: int, scale: int = 1):
    """
    Every (x, y) with x, y > 0 and x^2 + d*y^2 = scale * p.

    Independent oracle for the Cornacchia path.
    """
    target = scale * p
    found = []
    y = 1
    while d * y * y < target:
        rest = target - d * y * y
        x = isqrt(rest)
        if x > 0 and x * x == rest:
            found.append((x, y))
        y += 1
    return found


def represent(p: int, d: int) -> QuadRep:
    """
    Represents p = x^2 + d*y^2.

    Args:
        p: Prime greater than d
        d: One of 2, 3, 4, 7

    Raises:
        NoRepresentation: p lies outside the form's residue classes
    """
    if d not in SUPPORTED_FORMS:
        raise NoRepresentation(f"Unsupported form x^2 + {d}y^2")
    if not is_represented(p, d):
        raise NoRepresentation(f"{p} is not of the form x^2 + {d}y^2")
    if d == 4:
        # x^2 + 4y^2 = x^2 + (2y)^2
        pair = _sum_of_two_squares(p)
    else:
        pair = cornacchia(d, p)
    if pair is None:
        logger.warning(f"Cornacchia descent failed for p={p}, d={d}; searching")
        found = exhaustive_search(p, d)
        if not found:
            raise NoRepresentation(f"No representation of {p} as x^2 + {d}y^2")
        pair = found[0]
    x, y = pair
    return QuadRep(p=p, d=d, x=x, y=y)


def _sum_of_two_squares(p: int):
    pair = cornacchia(1, p)
    if pair is None:
        return None
    a, b = pair
    # exactly one of a, b is even for odd p
    if a % 2 == 0:
        a, b = b, a
    return a, b // 2


def represent_4p27(p: int) -> QuadRep:
    """
    Represents 4p = x^2 + 27*y^2 for p = 1 mod 3.

    Derived from p = u^2 + 3v^2: since u = +-v mod 3 when 3 does not divide v,
    one of 4p = (u + 3v)^2 + 27((u - v)/3)^2 or (u - 3v)^2 + 27((u + v)/3)^2
    has integral y; when 3 | v, 4p = (2u)^2 + 27(2v/3)^2.
    """
    if p % 3 != 1:
        raise NoRepresentation(f"{p} is not 1 mod 3, so 4p != x^2 + 27y^2")
    base = _try_represent(p, 3)
    candidate = None
    if base is not None:
        u, v = base.x, base.y
        if v % 3 == 0:
            candidate = (2 * u, 2 * v // 3)
        elif (u - v) % 3 == 0:
            candidate = (abs(u + 3 * v), abs(u - v) // 3)
        else:
            candidate = (abs(u - 3 * v), abs(u + v) // 3)
    if candidate is None or candidate[0] * candidate[0] + 27 * candidate[1] ** 2 != 4 * p \
            or 0 in candidate:
        found = exhaustive_search(p, 27, scale=4)
        if not found:
            raise NoRepresentation(f"No representation of 4*{p} as x^2 + 27y^2")
        candidate = found[0]
    x, y = candidate
    return QuadRep(p=p, d=27, x=x, y=y, scaled=True)


def _try_represent(p: int, d: int):
    try:
        return represent(p, d)
    except NoRepresentation:
        return None
