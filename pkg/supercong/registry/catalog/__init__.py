# registry/catalog/__init__.py
import logging
from fnmatch import fnmatchcase
from functools import lru_cache

from padic.exceptions import OutOfRange

from ..types import Kind
from . import cited, conjectures, families, parametric
from .common import ERRATUM_SUFFIX

logger = logging.getLogger(__name__)

SECTIONS = (families, parametric, cited, conjectures)


@lru_cache(maxsize=1)
def build_catalog():
    """
    Every statement keyed by id, in catalog order.

    Raises:
        ValueError: two statements share an id
    """
    entries = {}
    for section in SECTIONS:
        for statement in section.statements():
            if statement.id in entries:
                raise ValueError(f"Duplicate statement id {statement.id}")
            entries[statement.id] = statement
    logger.debug(f"Catalog built with {len(entries)} statements")
    return entries


def resolve(patterns, include_errata=False):
    """
    Expands ids, id prefixes ("C13.7.i" selects C13.7.i.k2, ...) and globs
    ("T*.2") into catalog ids, preserving catalog order.

    Printed forms kept as errata ("T8.4.as-printed") are selected by their
    exact id, by a pattern naming the suffix, or with include_errata.

    Raises:
        OutOfRange: a pattern matches nothing
    """
    entries = build_catalog()

    def wanted(sid, pattern=''):
        return (include_errata or ERRATUM_SUFFIX in pattern
                or entries[sid].kind is not Kind.ERRATUM)

    if not patterns:
        return [sid for sid in entries if wanted(sid)]
    selected = set()
    for pattern in patterns:
        if pattern in entries:
            matched = [pattern]
        elif any(ch in pattern for ch in '*?['):
            matched = [sid for sid in entries
                       if fnmatchcase(sid, pattern) and wanted(sid, pattern)]
        else:
            matched = [sid for sid in entries
                       if sid.startswith(pattern + '.') and wanted(sid, pattern)]
        if not matched:
            raise OutOfRange(f"No statement matches {pattern!r}")
        selected.update(matched)
    return [sid for sid in entries if sid in selected]
