"""Brute-force reference semantics by subset enumeration.

Deliberately naive: every definition is evaluated literally against the
attack relation, without any of the solver's adjacency bookkeeping.
"""

import enum

from .state import Extension

MAX_ARGS = 20


class SemanticsKind(enum.Enum):
    CONFLICT_FREE = "CF"
    ADMISSIBLE = "AD"
    COMPLETE = "CO"
    STABLE = "ST"
    GROUNDED = "GR"


class TooLarge(Exception):
    pass


def _hit(af, S):
    """Arguments attacked by some member of ``S``."""
    return {b for a, b in af.attacks if a in S}


def _defended(af, S):
    """Arguments all of whose attackers are attacked by ``S``."""
    hit = _hit(af, S)
    return set(range(af.n)) - {b for a, b in af.attacks if a not in hit}


def _conflict_free(af, S):
    return not any(a in S and b in S for a, b in af.attacks)


def _admissible(af, S):
    return _conflict_free(af, S) and S <= _defended(af, S)


def _complete(af, S):
    return _conflict_free(af, S) and _defended(af, S) == S


def _stable(af, S):
    return _conflict_free(af, S) and _hit(af, S) | S == set(range(af.n))


_CHECKS = {
    SemanticsKind.CONFLICT_FREE: _conflict_free,
    SemanticsKind.ADMISSIBLE: _admissible,
    SemanticsKind.COMPLETE: _complete,
    SemanticsKind.STABLE: _stable,
}


def check(af, S, kind):
    S = set(S)
    if kind is SemanticsKind.GROUNDED:
        return Extension.of(S) in enumerate_brute(af, kind)
    return _CHECKS[kind](af, S)


def _subsets(n):
    for mask in range(1 << n):
        yield {i for i in range(n) if mask >> i & 1}


def enumerate_brute(af, kind):
    if af.n > MAX_ARGS:
        raise TooLarge(f"{af.n} arguments exceeds the oracle cap of {MAX_ARGS}")
    if kind is SemanticsKind.GROUNDED:
        complete = enumerate_brute(af, SemanticsKind.COMPLETE)
        least = min(complete, key=len)
        return {least}
    test = _CHECKS[kind]
    return {Extension.of(S) for S in _subsets(af.n) if test(af, S)}
