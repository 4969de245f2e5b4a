# registry/services.py
import logging
import multiprocessing
import random
import time
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional

import django
from django.conf import settings
from sympy import isprime, primerange

from padic.exceptions import (
    CompositeModulus,
    DivisionByZero,
    ExactPole,
    NegativeValuation,
    NotPAdicInteger,
    OutOfRange,
    PrecisionExhausted,
)
from padic.services import (
    ValuedResidue,
    default_precision,
    is_p_integral,
    make_context,
    reduce_mod,
)

from .catalog import build_catalog, resolve
from .quantities import Quantities
from .types import Kind, Sample, Sampler, Statement, Status, VerificationResult

logger = logging.getLogger(__name__)

CANDIDATE_BOUND = 12
T_VALUES = (1, 2, 3)


def _setting(key, default=None):
    value = getattr(settings, 'SUPERCONG', {}).get(key)
    return default if value is None else value


def catalog() -> List[Statement]:
    return list(build_catalog().values())


def get_statement(statement_id: str) -> Statement:
    try:
        return build_catalog()[statement_id]
    except KeyError:
        raise OutOfRange(f"Unknown statement {statement_id!r}")


def resolve_ids(patterns=None, include_conjectures: bool = True,
                include_errata: bool = False) -> List[str]:
    ids = resolve(patterns or [], include_errata)
    if not include_conjectures:
        entries = build_catalog()
        ids = [sid for sid in ids if entries[sid].kind is not Kind.CONJECTURE]
    return ids


def working_precision(statement: Statement, precision: Optional[int] = None) -> int:
    """Explicit precision, else the configured one, else enough for the largest exponent."""
    if precision is not None:
        return precision
    return _setting('PRECISION') or default_precision(statement.max_exponent)


def _as_value(q: Quantities, x) -> ValuedResidue:
    if isinstance(x, ValuedResidue):
        return x
    return q.value(Fraction(x))


def _residue(x: ValuedResidue, e: int):
    try:
        return reduce_mod(x, e)
    except (NegativeValuation, PrecisionExhausted):
        return None


def _compare(diff: ValuedResidue, e: int) -> Status:
    if diff.zero:
        if diff.zero_prec is None or diff.zero_prec >= e:
            return Status.PASS
        return Status.PRECISION_ERROR
    return Status.PASS if diff.v >= e else Status.FAIL


def check(statement, p: int, sample: Optional[Sample] = None, precision: Optional[int] = None,
          strict_floors: bool = False) -> VerificationResult:
    """
    Verifies one statement at one prime (and one sample for parametric statements).

    Args:
        statement: Statement or its id
        p: Odd prime
        sample: Parameter values, required for parametric statements
        precision: Working precision exponent; None picks one from the exponents
        strict_floors: Also skip primes below a stricter floor quoted elsewhere

    Returns:
        VerificationResult with Pass, Fail, NotApplicable, PrecisionError or Pole

    Raises:
        CompositeModulus: p is not an odd prime
        OutOfRange: unknown id, or a parametric statement without a sample
    """
    if isinstance(statement, str):
        statement = get_statement(statement)
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise CompositeModulus(f"{p} is not an odd prime")
    if statement.parametric and sample is None:
        raise OutOfRange(f"{statement.id} is parametric and needs a sample")

    if not statement.applies(p, strict_floors):
        return _not_applicable(statement, p, sample)

    result = VerificationResult(statement.id, p, Status.NOT_APPLICABLE, sample=sample)

    started = time.perf_counter()
    ctx = make_context(p, working_precision(statement, precision))
    q = Quantities(ctx, sample)
    try:
        if sample is not None and sample.a is not None and not is_p_integral(ctx, sample.a):
            result.message = f"sample {sample} is not a p-adic integer"
            return result
        if statement.parametric and not statement.is_admissible(q):
            result.message = f"sample {sample} is not admissible: {statement.admissible_text}"
            return result
        branch = statement.branch_for(q)
        exponent = branch.exponent or statement.exponent
        result.branch, result.exponent, result.modulus = branch.name, exponent, p ** exponent
        lhs = _as_value(q, statement.lhs(q))
        rhs = _as_value(q, branch.rhs(q))
        result.status = _compare(lhs - rhs, exponent)
        result.lhs_residue = _residue(lhs, exponent)
        result.rhs_residue = _residue(rhs, exponent)
    except NotPAdicInteger as e:
        result.message = f"sample {sample} is not a p-adic integer: {str(e)}"
    except ExactPole as e:
        result.status = Status.POLE
        result.message = str(e)
    except (PrecisionExhausted, DivisionByZero) as e:
        result.status = Status.PRECISION_ERROR
        result.message = str(e)
    except Exception as e:
        logger.error(f"Error checking {statement.id} at p={p}, sample={sample}: {str(e)}")
        raise
    finally:
        result.elapsed_ms = (time.perf_counter() - started) * 1000
    if q.used_rep is not None:
        result.x, result.y = q.used_rep.x, q.used_rep.y
    if result.status is Status.FAIL:
        logger.warning(f"{statement.id} fails at p={p}"
                       + (f", a={sample}" if sample is not None else ''))
    return result


def _not_applicable(statement, p, sample=None):
    return VerificationResult(statement.id, p, Status.NOT_APPLICABLE, sample=sample,
                              message=f"hypotheses fail: {statement.hypotheses}")


def _candidates(p: int):
    found = set()
    for r in range(1, CANDIDATE_BOUND + 1):
        for s in range(1, CANDIDATE_BOUND + 1):
            if s % p == 0:
                continue
            found.add(Fraction(r, s))
            found.add(Fraction(-r, s))
    return sorted(found)


def default_samples(statement, p: int, seed: Optional[int] = None,
                    per_parity: Optional[int] = None) -> List[Sample]:
    """
    Deterministic samples for a parametric statement at p.

    For a: rationals r/s with |r|, s <= 12, shuffled by (seed, id, p), keeping
    per_parity admissible values for each parity of <a>_p, plus a = p-2 when
    admissible. For t: t in {1, 2, 3}; for (t, n): n in {1, 2, (p-1)/2} as well.
    """
    if isinstance(statement, str):
        statement = get_statement(statement)
    seed = _setting('SEED', 0) if seed is None else seed
    per_parity = _setting('SAMPLES_PER_PARITY', 20) if per_parity is None else per_parity
    ctx = make_context(p, default_precision(statement.max_exponent))

    def admissible(sample):
        try:
            return statement.is_admissible(Quantities(ctx, sample))
        except NotPAdicInteger:
            return False

    if statement.sampler is Sampler.T:
        return [Sample(t=t) for t in T_VALUES]
    if statement.sampler is Sampler.T_N:
        ns = sorted({n for n in (1, 2, (p - 1) // 2) if 1 <= n <= (p - 1) // 2})
        return [s for s in (Sample(t=t, n=n) for t in T_VALUES for n in ns) if admissible(s)]

    candidates = _candidates(p)
    random.Random(f"{seed}:{statement.id}:{p}").shuffle(candidates)
    kept = {0: [], 1: []}
    for a in candidates:
        sample = Sample(a=a)
        parity = Quantities(ctx, sample).r % 2
        if len(kept[parity]) < per_parity and admissible(sample):
            kept[parity].append(sample)
        if all(len(v) >= per_parity for v in kept.values()):
            break
    samples = kept[0] + kept[1]
    edge = Sample(a=Fraction(p - 2))
    if edge not in samples and admissible(edge):
        samples.append(edge)
    return samples


def check_parametric(statement, p: int, samples: Optional[Iterable[Sample]] = None,
                     precision: Optional[int] = None, strict_floors: bool = False,
                     seed: Optional[int] = None,
                     per_parity: Optional[int] = None) -> List[VerificationResult]:
    """Checks every sample, the deterministic defaults when none are given."""
    if isinstance(statement, str):
        statement = get_statement(statement)
    if not statement.parametric:
        return [check(statement, p, precision=precision, strict_floors=strict_floors)]
    if not statement.applies(p, strict_floors):
        return [_not_applicable(statement, p)]
    if samples is None:
        samples = default_samples(statement, p, seed, per_parity)
    return [check(statement, p, s, precision, strict_floors) for s in samples]


def prime_list(lo: int, hi: int) -> List[int]:
    """Odd primes in [lo, hi]."""
    if lo > hi:
        raise OutOfRange(f"Empty prime range {lo}..{hi}")
    return [p for p in primerange(max(lo, 3), hi + 1)]


def _run_task(task):
    sid, p, samples, precision, strict_floors, seed, per_parity = task
    return check_parametric(sid, p, samples, precision, strict_floors, seed, per_parity)


def _init_worker():
    django.setup()


def _warn_floor_divergence(ids, primes, strict_floors):
    entries = build_catalog()
    for sid in ids:
        statement = entries[sid]
        if statement.preview_floor is None or statement.preview_floor == statement.floor:
            continue
        low, high = sorted((statement.floor, statement.preview_floor))
        affected = [p for p in primes if low < p <= high]
        if affected:
            action = 'skipped' if strict_floors else 'checked'
            logger.warning(
                f"{sid}: floor p > {statement.floor} differs from the quoted p > "
                f"{statement.preview_floor}; {action} at {affected}"
            )


def check_range(ids, primes, samples: Optional[List[Sample]] = None,
                precision: Optional[int] = None, strict_floors: bool = False,
                threads: Optional[int] = None, seed: Optional[int] = None,
                per_parity: Optional[int] = None,
                include_conjectures: bool = True,
                include_errata: bool = False) -> Iterator[VerificationResult]:
    """
    Verifies statements over primes, yielding results in (id, p, sample) order.

    Args:
        ids: Ids, prefixes or globs; empty selects the whole catalog
        primes: Iterable of odd primes
        samples: Override of the default parametric samples
        threads: Worker processes; 1 runs in this process
        include_conjectures: Keep statements of kind conjecture
        include_errata: Let globs and prefixes select printed forms kept as errata
    """
    ids = resolve_ids(ids, include_conjectures, include_errata)
    primes = list(primes)
    for p in primes:
        if not isinstance(p, int) or p < 3 or not isprime(p):
            raise CompositeModulus(f"{p} is not an odd prime")
    _warn_floor_divergence(ids, primes, strict_floors)
    threads = _setting('THREADS', 1) if threads is None else threads
    tasks = [(sid, p, samples, precision, strict_floors, seed, per_parity)
             for sid in ids for p in primes]
    logger.info(f"Checking {len(ids)} statements at {len(primes)} primes with {threads} workers")

    if threads <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield from _run_task(task)
        return

    with multiprocessing.get_context().Pool(processes=threads, initializer=_init_worker) as pool:
        for results in pool.imap(_run_task, tasks, chunksize=1):
            yield from results
