# registry/types.py
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple

from padic.services import ValuedResidue
from sums.services import evaluate
from sums.specs import SumSpec


class Kind(Enum):
    """How established a statement is"""
    THEOREM = 'theorem'
    LEMMA = 'lemma'
    COROLLARY = 'corollary'
    CONJECTURE = 'conjecture'
    CITED = 'cited-result'
    CONSISTENCY = 'consistency'
    ERRATUM = 'erratum'


class Status(Enum):
    """Verification status"""
    PASS = 'Pass'
    FAIL = 'Fail'
    NOT_APPLICABLE = 'NotApplicable'
    PRECISION_ERROR = 'PrecisionError'
    POLE = 'Pole'


class Sampler(Enum):
    """Which parameters a parametric statement quantifies over"""
    A = 'a'
    T = 't'
    T_N = 't,n'


@dataclass(frozen=True)
class Sample:
    a: Optional[Fraction] = None
    t: Optional[int] = None
    n: Optional[int] = None

    def __str__(self):
        if self.a is not None:
            return str(self.a)
        if self.n is None:
            return f"t={self.t}"
        return f"t={self.t},n={self.n}"


@dataclass(frozen=True)
class Branch:
    """One case of a right-hand side; exponent overrides the statement's when set"""
    name: str
    when: Callable
    rhs: Callable
    exponent: Optional[int] = None


@dataclass(frozen=True)
class SumLhs:
    """A catalog sum, optionally multiplied by a sign depending on p."""
    spec: SumSpec
    sign: Optional[Callable[[int], int]] = None

    def __call__(self, q) -> ValuedResidue:
        value = evaluate(q.ctx, self.spec)
        if self.sign is not None:
            value = value * self.sign(q.p)
        return value

    def __str__(self):
        return str(self.spec)


@dataclass(frozen=True)
class Statement:
    """
    One congruence of the catalog.

    floor: the statement needs p > floor
    condition: further predicate on p, described by condition_text
    admissible: predicate on Quantities for parametric samples
    preview_floor: a stricter floor quoted for the same congruence elsewhere
    """
    id: str
    kind: Kind
    exponent: int
    lhs: Callable
    branches: Tuple[Branch, ...]
    floor: int = 2
    condition: Optional[Callable[[int], bool]] = None
    condition_text: str = ''
    parametric: bool = False
    admissible: Optional[Callable] = None
    admissible_text: str = ''
    sampler: Sampler = Sampler.A
    quote: str = ''
    preview_floor: Optional[int] = None
    note: str = ''

    @property
    def max_exponent(self) -> int:
        return max([self.exponent] + [b.exponent for b in self.branches if b.exponent])

    def effective_floor(self, strict: bool = False) -> int:
        if strict and self.preview_floor is not None:
            return max(self.floor, self.preview_floor)
        return self.floor

    def applies(self, p: int, strict: bool = False) -> bool:
        if p <= self.effective_floor(strict):
            return False
        return self.condition is None or self.condition(p)

    def is_admissible(self, q) -> bool:
        return self.admissible is None or self.admissible(q)

    def branch_for(self, q) -> Branch:
        """The unique branch whose case holds; anything else is a catalog defect."""
        fired = [b for b in self.branches if b.when(q)]
        if len(fired) != 1:
            raise LookupError(
                f"{self.id}: {len(fired)} branches fire at p={q.p}: {[b.name for b in fired]}"
            )
        return fired[0]

    @property
    def hypotheses(self) -> str:
        parts = [f"p > {self.floor}"]
        if self.condition_text:
            parts.append(self.condition_text)
        if self.admissible_text:
            parts.append(self.admissible_text)
        return '; '.join(parts)


@dataclass
class VerificationResult:
    statement_id: str
    p: int
    status: Status
    modulus: Optional[int] = None
    exponent: Optional[int] = None
    lhs_residue: Optional[int] = None
    rhs_residue: Optional[int] = None
    branch: Optional[str] = None
    sample: Optional[Sample] = None
    x: Optional[int] = None
    y: Optional[int] = None
    elapsed_ms: Optional[float] = None
    message: str = ''

    @property
    def counts_against(self) -> bool:
        return self.status in (Status.FAIL, Status.PRECISION_ERROR)
