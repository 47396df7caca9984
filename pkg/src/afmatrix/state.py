"""Search-tree nodes: the shrinking attack matrix and its two transitions.

A state keeps four id sets over a shared, read-only framework:

* ``off``  live rows, i.e. arguments that may still be chosen
* ``def_`` live columns, i.e. arguments neither chosen nor attacked yet
* ``att``  arguments that still count as attackers
* ``ext``  the extension built so far

In stable mode ``att`` always equals ``off``. In complete mode an argument
excluded by :func:`node_not_chosen` leaves ``off`` but keeps attacking, so it
stays in ``att`` until something in ``ext`` attacks it.
"""

import enum
from dataclasses import dataclass, field


class Mode(enum.Enum):
    STABLE = "ST"
    COMPLETE = "CO"


class PreconditionViolation(Exception):
    pass


@dataclass(frozen=True, order=True)
class Extension:
    members: tuple = ()

    @classmethod
    def of(cls, ids):
        return cls(tuple(sorted(set(ids))))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in self.members


@dataclass
class MatrixState:
    af: object = field(repr=False, compare=False)
    mode: Mode
    off: set
    def_: set
    att: set
    ext: set

    def key(self):
        return (
            self.mode,
            frozenset(self.off),
            frozenset(self.def_),
            frozenset(self.att),
            frozenset(self.ext),
        )

    def dump(self):
        return canonical_dump(self)


def initial_state(af, mode=Mode.STABLE):
    everything = set(range(af.n))
    return MatrixState(af, mode, set(everything), set(everything), set(everything), set())


def clone_state(s):
    return MatrixState(s.af, s.mode, set(s.off), set(s.def_), set(s.att), set(s.ext))


def op_range(s):
    return s.off & s.def_


def rel_targets(s, a):
    return s.af.targets_of[a] & s.def_


def rel_attackers(s, a):
    return s.af.attackers_of[a] & s.att


def node_chosen(s, i):
    """Return a copy of ``s`` with ``i`` committed to the extension."""
    af = s.af
    if i not in s.off or i not in s.def_:
        raise PreconditionViolation(f"argument {i} is not in OFF and DEF")
    if i in af.self_attackers:
        raise PreconditionViolation(f"argument {i} attacks itself")
    if af.attackers_of[i] & s.ext:
        raise PreconditionViolation(f"argument {i} is attacked by the extension")
    hit = rel_targets(s, i)
    # conflict removal always filters by off, even in complete mode
    blocked = af.attackers_of[i] & s.off
    t = clone_state(s)
    t.ext.add(i)
    t.off -= hit | blocked
    t.off.discard(i)
    t.def_ -= hit
    t.def_.discard(i)
    if s.mode is Mode.STABLE:
        t.att = set(t.off)
    else:
        # only arguments the extension attacks stop counting as attackers
        t.att -= hit
        t.att.discard(i)
    return t


def node_not_chosen(s, i):
    """Return a copy of ``s`` with ``i`` excluded from the extension."""
    if i not in s.off:
        raise PreconditionViolation(f"argument {i} is not in OFF")
    t = clone_state(s)
    t.off.discard(i)
    if s.mode is Mode.STABLE:
        t.att.discard(i)
    return t


def _fmt(af, ids):
    return "{" + ",".join(af.arguments[i] for i in sorted(ids)) + "}"


def canonical_dump(s):
    """One-line rendering of the state, stable across runs."""
    af = s.af
    return (
        f"mode={s.mode.value} off={_fmt(af, s.off)} def={_fmt(af, s.def_)} "
        f"att={_fmt(af, s.att)} ext={_fmt(af, s.ext)}"
    )


def render_matrix(s):
    """Render the attack matrix with erased rows and columns struck out.

    A struck row or column header carries a ``~`` prefix and its cells print
    as ``-``; live cells print ``1`` for an attack and ``0`` otherwise.
    """
    af = s.af
    labels = [("" if i in s.def_ else "~") + af.arguments[i] for i in range(af.n)]
    rows = [("" if i in s.off else "~") + af.arguments[i] for i in range(af.n)]
    width = max([len(x) for x in labels + rows] + [5])
    out = ["nodes".ljust(width) + " | " + " ".join(x.rjust(width) for x in labels)]
    out.append("-" * len(out[0]))
    for i in range(af.n):
        cells = []
        for j in range(af.n):
            if i not in s.off or j not in s.def_:
                cells.append("-")
            else:
                cells.append("1" if j in af.targets_of[i] else "0")
        out.append(rows[i].ljust(width) + " | " + " ".join(c.rjust(width) for c in cells))
    out.append("E = " + _fmt(af, s.ext))
    return "\n".join(out)
