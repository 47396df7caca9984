"""Branch-and-reduce enumeration of stable and complete extensions."""

from collections import deque
from dataclasses import dataclass, field

from .state import (
    Extension,
    Mode,
    PreconditionViolation,
    initial_state,
    node_chosen,
    node_not_chosen,
    op_range,
    rel_attackers,
)

TASKS = ("SE", "EE", "DC", "DS")
SEMANTICS = {"ST": Mode.STABLE, "CO": Mode.COMPLETE}


class UnknownQueryArgument(Exception):
    pass


@dataclass
class BranchOutcome:
    successors: list
    chosen: int


@dataclass(frozen=True)
class TaskSpec:
    task: str
    semantics: str
    query: str = None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}")
        if self.semantics not in SEMANTICS:
            raise ValueError(f"unknown semantics {self.semantics!r}")
        if (self.task in ("DC", "DS")) != (self.query is not None):
            raise ValueError(f"{self.task} requires a query argument iff it is DC or DS")

    @classmethod
    def parse(cls, problem, query=None):
        try:
            task, sem = problem.upper().split("-")
        except ValueError:
            raise ValueError(f"malformed problem {problem!r}") from None
        return cls(task, sem, query)

    @property
    def mode(self):
        return SEMANTICS[self.semantics]

    def __str__(self):
        return f"{self.task}-{self.semantics}"


@dataclass
class Stats:
    states_expanded: int = 0
    states_abandoned: int = 0
    duplicates_suppressed: int = 0
    peak_frontier: int = 0

    def as_dict(self):
        return dict(self.__dict__)


@dataclass
class SolveResult:
    # list of Extension for EE, Extension or None for SE, bool for DC/DS
    answer: object
    stats: Stats = field(default_factory=Stats)

    @property
    def extensions(self):
        return self.answer


def grounded_extension(af):
    """Least fixpoint of the defence function, computed by labelling.

    An argument goes IN once every attacker is OUT, and OUT once some IN
    argument attacks it.
    """
    alive = [len(af.attackers_of[a]) for a in range(af.n)]
    is_in = [False] * af.n
    is_out = [False] * af.n
    queue = deque(a for a in range(af.n) if alive[a] == 0)
    while queue:
        a = queue.popleft()
        if is_in[a] or is_out[a]:
            continue
        is_in[a] = True
        for b in af.targets_of[a]:
            if is_out[b]:
                continue
            is_out[b] = True
            for c in af.targets_of[b]:
                alive[c] -= 1
                if alive[c] == 0 and not is_out[c]:
                    queue.append(c)
    return Extension.of(a for a in range(af.n) if is_in[a])


def seed_with_grounded(s0, g):
    s = s0
    for a in sorted(g):
        if a in s.ext:
            continue
        if a not in s.off or a not in s.def_:
            raise PreconditionViolation(f"grounded argument {a} is blocked")
        s = node_chosen(s, a)
    return s


def expand(s, pick=None):
    """One branching step.

    ``pick`` overrides the least-attackers heuristic for the branching node
    (used to replay hand-worked traces); the unattacked shortcut still wins.
    """
    af = s.af
    candidates = op_range(s)
    if not candidates:
        raise PreconditionViolation("empty op_range")
    attackers_of, att, loops = af.attackers_of, s.att, af.self_attackers
    best, best_count = None, None
    for i in sorted(candidates):
        count = len(attackers_of[i] & att)
        if count == 0 and i not in loops:
            return BranchOutcome([node_chosen(s, i)], i)
        if best is None or count < best_count:
            best, best_count = i, count
    if pick is None:
        i = best
    else:
        if pick not in candidates:
            raise PreconditionViolation(f"argument {pick} is not in op_range")
        i = pick
    if i in af.self_attackers:
        return BranchOutcome([node_not_chosen(s, i)], i)
    return BranchOutcome([node_chosen(s, i), node_not_chosen(s, i)], i)


def is_stable_accept(s):
    return not s.off and not s.def_


def is_abandoned(s):
    return not s.off and bool(s.def_)


def is_complete_accept(s):
    """Admissible and closed under defence.

    Every argument still in ``def_`` (neither in the extension nor attacked
    by it) must keep a live attacker, and every member of the extension must
    have all of its attackers struck out.
    """
    af = s.af
    for i in s.def_:
        if i not in af.self_attackers and not rel_attackers(s, i):
            return False
    return all(not (af.attackers_of[e] & s.att) for e in s.ext)


def is_dead(s):
    """True when no descendant of ``s`` can be accepted.

    Stable: some uncovered column lost every possible attacker.
    Complete: some argument the extension already defends can no longer be
    chosen.
    """
    af = s.af
    if s.mode is Mode.STABLE:
        return any(not (af.attackers_of[i] & s.off) for i in s.def_ - s.off)
    return any(
        i not in af.self_attackers and not rel_attackers(s, i) for i in s.def_ - s.off
    )


def _accepts(s):
    if s.mode is Mode.STABLE:
        return is_stable_accept(s)
    return is_complete_accept(s)


def iter_extensions(af, mode, stats=None, trace=None):
    """Yield each accepted extension once, in deterministic search order.

    Depth-first over states, the chosen branch before the not-chosen one.
    ``trace`` is called with every state as it is generated.
    """
    if stats is None:
        stats = Stats()
    seen = set()

    def visit(s):
        # returns (expand further?, newly accepted extension or None)
        if trace is not None:
            trace(s)
        if (mode is Mode.STABLE and is_abandoned(s)) or is_dead(s):
            stats.states_abandoned += 1
            return False, None
        live = bool(s.off) if mode is Mode.STABLE else bool(op_range(s))
        if not _accepts(s):
            return live, None
        ext = Extension.of(s.ext)
        if ext in seen:
            stats.duplicates_suppressed += 1
            return live, None
        seen.add(ext)
        return live, ext

    root = seed_with_grounded(initial_state(af, mode), grounded_extension(af))
    live, found = visit(root)
    if found is not None:
        yield found
    frontier = [root] if live else []
    while frontier:
        stats.peak_frontier = max(stats.peak_frontier, len(frontier))
        s = frontier.pop()
        stats.states_expanded += 1
        children = []
        for child in expand(s).successors:
            live, found = visit(child)
            if found is not None:
                yield found
            if live:
                children.append(child)
        # reversed so the chosen branch is popped first
        frontier.extend(reversed(children))


def enumerate(af, mode, limit=None, trace=None):
    stats = Stats()
    out = []
    for ext in iter_extensions(af, mode, stats, trace):
        out.append(ext)
        if limit is not None and len(out) >= limit:
            break
    return SolveResult(out, stats)


def solve(af, task, trace=None):
    mode = task.mode
    stats = Stats()
    if task.task == "EE":
        return SolveResult(list(iter_extensions(af, mode, stats, trace)), stats)
    if task.task == "SE":
        first = next(iter_extensions(af, mode, stats, trace), None)
        return SolveResult(first, stats)
    if task.query not in af.index:
        raise UnknownQueryArgument(task.query)
    q = af.index[task.query]
    if task.task == "DC":
        hit = any(q in ext for ext in iter_extensions(af, mode, stats, trace))
        return SolveResult(hit, stats)
    counter = any(q not in ext for ext in iter_extensions(af, mode, stats, trace))
    return SolveResult(not counter, stats)
