"""Sources for |Av_i(sigma)|: closed forms, exhaustive counting and user files."""

import logging
from typing import Dict, Optional

from ..enumeration import catalan_list
from ..errors import AcceptanceCheckError, InvalidInputError
from ..permutations import Permutation, PatternLike, as_permutation, count_class
from .models import AvoidanceSequence, Provenance

logger = logging.getLogger(__name__)

# largest i counted by exhaustion, per pattern length
ORACLE_LIMITS = {3: 11, 4: 10}
DEFAULT_ORACLE_LIMIT = 9


def oracle_limit(pattern: Permutation) -> int:
    return ORACLE_LIMITS.get(len(pattern), DEFAULT_ORACLE_LIMIT)


def closed_form_sequence(pattern: PatternLike, terms: int) -> AvoidanceSequence:
    """Patterns of length 2 (one avoider per size) and 3 (Catalan numbers)."""
    pattern = as_permutation(pattern)
    if len(pattern) == 2:
        values = [1] * terms
    elif len(pattern) == 3:
        values = catalan_list(terms)[1:]
    else:
        raise InvalidInputError(f"no closed form for patterns of length {len(pattern)}")
    return AvoidanceSequence(pattern, tuple(values), (Provenance.CLOSED_FORM,) * terms)


def oracle_avoidance_sequence(
    pattern: PatternLike, i_max: int, ceiling: Optional[int] = None
) -> AvoidanceSequence:
    """|Av_i(pattern)| for i = 1..i_max by exhaustive enumeration."""
    pattern = as_permutation(pattern)
    if len(pattern) < 2:
        raise InvalidInputError("patterns of length 1 are avoided by nothing but the empty permutation")
    values = []
    for i in range(1, i_max + 1):
        values.append(count_class(i, pattern, ceiling))
        logger.info(f"|Av_{i}({pattern})| = {values[-1]}")
    return AvoidanceSequence(pattern, tuple(values), (Provenance.ORACLE,) * i_max)


def _read_terms(path: str) -> Dict[int, int]:
    terms: Dict[int, int] = {}
    try:
        with open(path, "r") as f:
            for line_no, line in enumerate(f, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise InvalidInputError(f"{path}:{line_no}: expected 'i count', got {line!r}")
                try:
                    terms[int(parts[0])] = int(parts[1])
                except ValueError as e:
                    raise InvalidInputError(f"{path}:{line_no}: not an integer in {line!r}") from e
    except OSError as e:
        raise InvalidInputError(f"cannot read avoidance sequence file '{path}'") from e
    return terms


def load_avoidance_sequence(path: str, pattern: PatternLike) -> AvoidanceSequence:
    """Reads lines ``i count`` (``#`` starts a comment); indices must run 1..N without gaps."""
    pattern = as_permutation(pattern)
    terms = _read_terms(path)
    expected = list(range(1, len(terms) + 1))
    if sorted(terms) != expected:
        raise InvalidInputError(f"'{path}' must list i = 1..{len(terms)} without gaps")
    values = tuple(terms[i] for i in expected)
    logger.info(f"Loaded {len(values)} terms of |Av_i({pattern})| from '{path}'")
    return AvoidanceSequence(pattern, values, (Provenance.USER_SUPPLIED,) * len(values))


def resolve_sequence(
    pattern: PatternLike,
    terms: int,
    seq_file: Optional[str] = None,
    verify_terms: int = 0,
    ceiling: Optional[int] = None,
) -> AvoidanceSequence:
    """Up to ``terms`` terms of |Av_i(pattern)| from the best available source.

    Lengths 2 and 3 use closed forms. Otherwise a supplied file wins, with its first
    ``verify_terms`` terms re-counted by exhaustion; without a file the oracle
    counts as far as its limit allows and the sequence comes back shorter.
    """
    pattern = as_permutation(pattern)
    if len(pattern) <= 3:
        return closed_form_sequence(pattern, terms)

    if seq_file:
        loaded = load_avoidance_sequence(seq_file, pattern)
        values = list(loaded.terms[:terms])
        provenance = list(loaded.provenance[:terms])
        check = min(verify_terms, len(values), oracle_limit(pattern))
        if check > 0:
            counted = oracle_avoidance_sequence(pattern, check, ceiling)
            for i, (given, found) in enumerate(zip(values, counted.terms), start=1):
                if given != found:
                    raise AcceptanceCheckError(
                        f"'{seq_file}' gives |Av_{i}({pattern})| = {given}, exhaustion gives {found}"
                    )
                provenance[i - 1] = Provenance.ORACLE
        if len(values) < terms:
            logger.warning(f"'{seq_file}' has {len(values)} terms, {terms} were requested")
        return AvoidanceSequence(pattern, tuple(values), tuple(provenance))

    available = min(terms, oracle_limit(pattern))
    if available < terms:
        logger.warning(
            f"Only {available} terms of |Av_i({pattern})| can be counted exhaustively; "
            "supply a sequence file for more"
        )
    return oracle_avoidance_sequence(pattern, available, ceiling)
