"""Quivers with length-2 relations, gentleness checking, sign functions.

Conventions used throughout the package:

* paths are read left to right, so a relation pair ``(a, b)`` means the
  path "first a, then b" is zero and requires ``t(a) == s(b)``;
* vertex and arrow identifiers are opaque strings, canonical orders are
  lexicographic on identifiers;
* the sign functions sigma/epsilon take values in {-1, +1} and satisfy

    - sigma(b1) == -sigma(b2)   for b1 != b2 with s(b1) == s(b2),
    - epsilon(a1) == -epsilon(a2) for a1 != a2 with t(a1) == t(a2),
    - sigma(b) == -epsilon(a)   whenever ab is composable and not in I.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class InputError(ValueError):
    """Malformed input (non-composable relation, unknown identifier, ...)."""


class GentlenessError(ValueError):
    """Raised when a presentation required to be gentle is not."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(f"({v.axiom}) {v.message}" for v in self.violations)
        super().__init__(f"not a gentle presentation: {lines}")


@dataclass(frozen=True)
class Violation:
    axiom: str      # "G1".."G4" or "FD"
    message: str
    witnesses: tuple


@dataclass(frozen=True)
class Quiver:
    vertices: frozenset
    sources: dict = field(hash=False)   # arrow id -> source vertex
    targets: dict = field(hash=False)   # arrow id -> target vertex

    @classmethod
    def from_arrows(cls, vertices, arrows):
        """arrows: iterable of (id, source, target) triples."""
        vertices = frozenset(vertices)
        sources, targets = {}, {}
        for a, s, t in arrows:
            if a in sources:
                raise InputError(f"duplicate arrow id {a!r}")
            if s not in vertices or t not in vertices:
                raise InputError(f"arrow {a!r} uses undeclared vertex")
            sources[a] = s
            targets[a] = t
        return cls(vertices, sources, targets)

    @property
    def arrows(self):
        return sorted(self.sources)

    def s(self, a):
        return self.sources[a]

    def t(self, a):
        return self.targets[a]

    def arrows_from(self, v):
        return [a for a in self.arrows if self.sources[a] == v]

    def arrows_into(self, v):
        return [a for a in self.arrows if self.targets[a] == v]


def _check_relations_composable(q: Quiver, relations):
    for a, b in relations:
        if a not in q.sources or b not in q.sources:
            raise InputError(f"relation ({a},{b}) references unknown arrow")
        if q.t(a) != q.s(b):
            raise InputError(f"relation ({a},{b}) is not composable")


@dataclass(frozen=True)
class GentleCheck:
    gentle: bool
    violations: tuple

    def __bool__(self):
        return self.gentle


def check_gentle(q: Quiver, relations) -> GentleCheck:
    """Verify axioms (G1)-(G4) plus finite-dimensionality.

    (G4) is structural here (relations are stored as composable pairs), so
    it can only fail through malformed input, which raises InputError.
    The extra axiom "FD" rejects relation-free oriented cycles; without it
    the path algebra is infinite dimensional and maximal direct strings
    (hence hooks) do not exist.
    """
    relations = frozenset(tuple(r) for r in relations)
    _check_relations_composable(q, relations)
    bad = []

    for v in sorted(q.vertices):
        outs = q.arrows_from(v)
        if len(outs) > 2:
            bad.append(Violation("G1", f"vertex {v} is the source of {len(outs)} arrows",
                                 (v, tuple(outs))))
        ins = q.arrows_into(v)
        if len(ins) > 2:
            bad.append(Violation("G1", f"vertex {v} is the target of {len(ins)} arrows",
                                 (v, tuple(ins))))

    for a in q.arrows:
        succ_free = [b for b in q.arrows_from(q.t(a)) if (a, b) not in relations]
        if len(succ_free) > 1:
            bad.append(Violation("G2", f"arrow {a} has {len(succ_free)} non-relation successors",
                                 (a, tuple(succ_free))))
        pred_free = [c for c in q.arrows_into(q.s(a)) if (c, a) not in relations]
        if len(pred_free) > 1:
            bad.append(Violation("G2", f"arrow {a} has {len(pred_free)} non-relation predecessors",
                                 (a, tuple(pred_free))))
        succ_rel = [b for b in q.arrows_from(q.t(a)) if (a, b) in relations]
        if len(succ_rel) > 1:
            bad.append(Violation("G3", f"arrow {a} lies in {len(succ_rel)} relations on the right",
                                 (a, tuple(succ_rel))))
        pred_rel = [c for c in q.arrows_into(q.s(a)) if (c, a) in relations]
        if len(pred_rel) > 1:
            bad.append(Violation("G3", f"arrow {a} lies in {len(pred_rel)} relations on the left",
                                 (a, tuple(pred_rel))))

    cycle = _relation_free_cycle(q, relations)
    if cycle is not None:
        bad.append(Violation("FD", "relation-free oriented cycle "
                             f"{' '.join(cycle)} (algebra infinite dimensional)",
                             tuple(cycle)))

    return GentleCheck(not bad, tuple(bad))


def _relation_free_cycle(q: Quiver, relations):
    """A directed cycle in the graph (arrows, a->b iff ab composable not in I)."""
    succ = {a: [b for b in q.arrows_from(q.t(a)) if (a, b) not in relations]
            for a in q.arrows}
    state = {}  # 0 = on stack, 1 = done
    for start in q.arrows:
        if start in state:
            continue
        stack = [(start, iter(succ[start]))]
        path = [start]
        state[start] = 0
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in state:
                    state[nxt] = 0
                    stack.append((nxt, iter(succ[nxt])))
                    path.append(nxt)
                    advanced = True
                    break
                if state[nxt] == 0:
                    return path[path.index(nxt):]
            if not advanced:
                state[node] = 1
                stack.pop()
                path.pop()
    return None


class _SignedUnionFind:
    """Union-find tracking a relative sign (+1/-1) to the class root."""

    def __init__(self):
        self.parent = {}
        self.sign = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.sign[x] = 1

    def find(self, x):
        if self.parent[x] == x:
            return x, 1
        root, s = self.find(self.parent[x])
        self.parent[x] = root
        self.sign[x] *= s
        return root, self.sign[x]

    def union(self, x, y, rel):
        """Impose sign(x) == rel * sign(y)."""
        self.add(x)
        self.add(y)
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx != rel * sy:
                raise AssertionError(f"inconsistent sign constraint between {x} and {y}")
            return
        self.parent[rx] = ry
        self.sign[rx] = sx * rel * sy


def assign_signs(q: Quiver, relations):
    """Deterministic sigma/epsilon assignment via signed union-find.

    Besides the three required conditions, compositions that lie in I get
    sigma(b) == +epsilon(a).  This sharper convention (consistent for
    gentle presentations) makes "vw defined iff sigma(w) == -epsilon(v)"
    exact and pins down the orientation of trivial-string arcs in the
    surface model.  Free classes get +1 at their first representative in
    sorted order.  Returns (sigma, epsilon) as dicts arrow -> +-1.
    """
    relations = frozenset(tuple(r) for r in relations)
    uf = _SignedUnionFind()
    nodes = [("s", a) for a in q.arrows] + [("e", a) for a in q.arrows]
    for n in nodes:
        uf.add(n)
    for v in sorted(q.vertices):
        outs = q.arrows_from(v)
        for b1, b2 in itertools.combinations(outs, 2):
            uf.union(("s", b1), ("s", b2), -1)
        ins = q.arrows_into(v)
        for a1, a2 in itertools.combinations(ins, 2):
            uf.union(("e", a1), ("e", a2), -1)
    for a in q.arrows:
        for b in q.arrows_from(q.t(a)):
            uf.union(("s", b), ("e", a), 1 if (a, b) in relations else -1)

    color = {}
    value = {}
    for n in sorted(nodes):
        root, s = uf.find(n)
        if root not in color:
            color[root] = s  # first-seen node of the class gets +1
        value[n] = color[root] * s

    sigma = {a: value[("s", a)] for a in q.arrows}
    epsilon = {a: value[("e", a)] for a in q.arrows}
    _verify_signs(q, relations, sigma, epsilon)
    return sigma, epsilon


def _verify_signs(q, relations, sigma, epsilon):
    for v in q.vertices:
        outs = q.arrows_from(v)
        for b1, b2 in itertools.combinations(outs, 2):
            assert sigma[b1] == -sigma[b2], (b1, b2)
        ins = q.arrows_into(v)
        for a1, a2 in itertools.combinations(ins, 2):
            assert epsilon[a1] == -epsilon[a2], (a1, a2)
    for a in q.arrows:
        for b in q.arrows_from(q.t(a)):
            if (a, b) not in relations:
                assert sigma[b] == -epsilon[a], (a, b)


@dataclass(frozen=True)
class GentlePresentation:
    """A gentle presentation kQ/I with fixed sign functions."""

    quiver: Quiver
    relations: frozenset          # of (a, b) arrow-id pairs, meaning ab in I
    sigma: dict = field(hash=False)
    epsilon: dict = field(hash=False)

    @classmethod
    def from_data(cls, vertices, arrows, relations):
        q = Quiver.from_arrows(vertices, arrows)
        relations = frozenset(tuple(r) for r in relations)
        verdict = check_gentle(q, relations)
        if not verdict:
            raise GentlenessError(verdict.violations)
        sigma, epsilon = assign_signs(q, relations)
        return cls(q, relations, sigma, epsilon)

    # -- convenience -------------------------------------------------

    @property
    def vertices(self):
        return sorted(self.quiver.vertices)

    @property
    def arrows(self):
        return self.quiver.arrows

    def s(self, a):
        return self.quiver.s(a)

    def t(self, a):
        return self.quiver.t(a)

    def arrows_from(self, v):
        return self.quiver.arrows_from(v)

    def arrows_into(self, v):
        return self.quiver.arrows_into(v)


def is_zero_path(p: GentlePresentation, path) -> bool:
    """True iff some adjacent pair of the direct path lies in I."""
    path = list(path)
    for a in path:
        if a not in p.quiver.sources:
            raise InputError(f"unknown arrow {a!r}")
    for a, b in zip(path, path[1:]):
        if p.t(a) != p.s(b):
            raise InputError(f"path not composable at {a} {b}")
    return any((a, b) in p.relations for a, b in zip(path, path[1:]))


# -- quiver description files ----------------------------------------
#
#   quiver
#   vertex <id>
#   arrow <id> <src> <tgt>
#   relation <id1> <id2>
#   end

def parse_quiver_raw(text: str):
    """(vertices, arrows, relations) from a quiver description file."""
    vertices, arrows, relations = [], [], []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        try:
            if kw == "quiver":
                seen_header = True
            elif kw == "vertex":
                (v,) = parts[1:]
                vertices.append(v)
            elif kw == "arrow":
                a, s, t = parts[1:]
                arrows.append((a, s, t))
            elif kw == "relation":
                a, b = parts[1:]
                relations.append((a, b))
            elif kw == "end":
                break
            else:
                raise InputError(f"line {lineno}: unknown keyword {kw!r}")
        except ValueError:
            raise InputError(f"line {lineno}: malformed {kw!r} line") from None
    if not seen_header:
        raise InputError("missing 'quiver' header line")
    return vertices, arrows, relations


def parse_quiver(text: str) -> GentlePresentation:
    return GentlePresentation.from_data(*parse_quiver_raw(text))


def load_quiver(path) -> GentlePresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())
