"""Argumentation frameworks: parsing, validation and static adjacency."""

import re
from dataclasses import dataclass, field


class AFError(Exception):
    pass


class AFSyntaxError(AFError):
    def __init__(self, lineno, line, reason="malformed line"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


class UnknownArgument(AFError):
    pass


class OutOfRange(AFError, IndexError):
    pass


@dataclass(frozen=True)
class ArgumentationFramework:
    """Immutable directed attack graph over dense integer ids ``0..n-1``.

    ``arguments[i]`` is the external name of id ``i``. Adjacency is kept as
    per-node frozensets; absent attacks are never stored.
    """

    arguments: tuple
    attacks: frozenset
    attackers_of: tuple = field(repr=False, compare=False)
    targets_of: tuple = field(repr=False, compare=False)
    self_attackers: frozenset = field(repr=False, compare=False)
    index: dict = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, arguments, attacks):
        arguments = tuple(arguments)
        index = {name: i for i, name in enumerate(arguments)}
        if len(index) != len(arguments):
            raise AFError("duplicate argument names")
        n = len(arguments)
        rel = set()
        for a, b in attacks:
            if not (0 <= a < n and 0 <= b < n):
                raise OutOfRange(f"attack ({a}, {b}) outside 0..{n - 1}")
            rel.add((a, b))
        att = [set() for _ in range(n)]
        tgt = [set() for _ in range(n)]
        for a, b in rel:
            tgt[a].add(b)
            att[b].add(a)
        return cls(
            arguments=arguments,
            attacks=frozenset(rel),
            attackers_of=tuple(frozenset(s) for s in att),
            targets_of=tuple(frozenset(s) for s in tgt),
            self_attackers=frozenset(a for a, b in rel if a == b),
            index=index,
        )

    @classmethod
    def from_names(cls, arguments, attacks):
        """Build from argument names and ``(attacker, target)`` name pairs."""
        arguments = list(arguments)
        index = {name: i for i, name in enumerate(arguments)}
        edges = []
        for a, b in attacks:
            for name in (a, b):
                if name not in index:
                    raise UnknownArgument(name)
            edges.append((index[a], index[b]))
        return cls.from_edges(arguments, edges)

    def __len__(self):
        return len(self.arguments)

    @property
    def n(self):
        return len(self.arguments)

    def id_of(self, name):
        try:
            return self.index[name]
        except KeyError:
            raise UnknownArgument(name) from None

    def names(self, ids):
        return [self.arguments[i] for i in ids]

    def to_apx(self):
        lines = [f"arg({a})." for a in self.arguments]
        lines += [
            f"att({self.arguments[a]},{self.arguments[b]})."
            for a, b in sorted(self.attacks)
        ]
        return "".join(line + "\n" for line in lines)


def attackers(af, a):
    """Static attackers of ``a`` over the whole framework."""
    if not 0 <= a < af.n:
        raise OutOfRange(a)
    return af.attackers_of[a]


def targets(af, a):
    """Static set of arguments attacked by ``a``."""
    if not 0 <= a < af.n:
        raise OutOfRange(a)
    return af.targets_of[a]


_NAME = r"[A-Za-z0-9_]+"
_ARG_RE = re.compile(rf"^arg\(\s*({_NAME})\s*\)\s*\.$")
_ATT_RE = re.compile(rf"^att\(\s*({_NAME})\s*,\s*({_NAME})\s*\)\s*\.$")
# several facts may share a physical line, e.g. "arg(a). arg(b)."
_FACT_SPLIT = re.compile(r"(?<=\.)\s+")


def _parse_apx(text):
    names = []
    seen = set()
    pending = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("//") or line.startswith("%"):
            continue
        for fact in _FACT_SPLIT.split(line):
            fact = fact.strip()
            m = _ARG_RE.match(fact)
            if m:
                if m.group(1) not in seen:
                    seen.add(m.group(1))
                    names.append(m.group(1))
                continue
            m = _ATT_RE.match(fact)
            if m:
                pending.append((lineno, raw, m.group(1), m.group(2)))
                continue
            raise AFSyntaxError(lineno, raw)
    index = {name: i for i, name in enumerate(names)}
    edges = []
    for lineno, raw, a, b in pending:
        for name in (a, b):
            if name not in index:
                raise UnknownArgument(f"line {lineno}: undeclared argument {name!r}")
        edges.append((index[a], index[b]))
    return ArgumentationFramework.from_edges(names, edges)


def _parse_iccma(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 3 or parts[:2] != ["p", "af"] or not parts[2].isdigit():
                raise AFSyntaxError(lineno, raw, "expected header 'p af <n>'")
            n = int(parts[2])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise AFSyntaxError(lineno, raw)
        i, j = int(parts[0]), int(parts[1])
        for k in (i, j):
            if not 1 <= k <= n:
                raise UnknownArgument(f"line {lineno}: argument {k} not in 1..{n}")
        edges.append((i - 1, j - 1))
    if n is None:
        raise AFSyntaxError(0, "", "missing 'p af <n>' header")
    return ArgumentationFramework.from_edges([str(k) for k in range(1, n + 1)], edges)


def detect_format(text):
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "iccma" if line.startswith("p af") else "apx"
    return "apx"


def parse_af(text, format="apx"):
    """Parse an instance document in ``apx`` or ``iccma`` format.

    ``format=None`` auto-detects (a leading ``p af`` header means iccma).
    """
    if format is None:
        format = detect_format(text)
    if format == "apx":
        return _parse_apx(text)
    if format == "iccma":
        return _parse_iccma(text)
    raise ValueError(f"unknown format {format!r}")
