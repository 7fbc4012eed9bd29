"""Strings and bands of a gentle algebra.

A string is a reduced, relation-avoiding walk: a sequence of letters,
each letter an arrow traversed forward ("direct") or backward
("inverse").  Trivial strings 1_v^+ and 1_v^- sit at a vertex v and are
swapped by formal inversion; the zero string is the empty one.

Text syntax (CLI and tests): letters separated by spaces, inverse
letters carry a trailing '-', e.g. ``b- c d c- b``; trivial strings are
written ``triv <vertex> <+|->`` and the zero string ``zero``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GentlePresentation, InputError


@dataclass(frozen=True, order=True)
class Letter:
    arrow: str
    inverse: bool = False

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def text(self) -> str:
        return self.arrow + ("-" if self.inverse else "")


def letter_source(p: GentlePresentation, l: Letter):
    return p.t(l.arrow) if l.inverse else p.s(l.arrow)


def letter_target(p: GentlePresentation, l: Letter):
    return p.s(l.arrow) if l.inverse else p.t(l.arrow)


def valid_pair(p: GentlePresentation, l1: Letter, l2: Letter) -> str | None:
    """None if l1 l2 is a valid length-2 string, else the reason."""
    if letter_target(p, l1) != letter_source(p, l2):
        return "non-composable"
    if l2 == l1.inv():
        return "not-reduced"
    if not l1.inverse and not l2.inverse and (l1.arrow, l2.arrow) in p.relations:
        return "relation"
    if l1.inverse and l2.inverse and (l2.arrow, l1.arrow) in p.relations:
        return "relation"
    return None


class StringRejection(ValueError):
    def __init__(self, position, reason):
        self.position = position
        self.reason = reason
        super().__init__(f"invalid string at position {position}: {reason}")


@dataclass(frozen=True)
class StringWord:
    """Zero, trivial, or a letter word.  Use the module constructors."""

    kind: str                 # "zero" | "trivial" | "word"
    vertex: str | None = None  # trivial only
    sign: int | None = None    # trivial only, +1 or -1
    letters: tuple = ()        # word only

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "StringWord":
        return StringWord("zero")

    @staticmethod
    def trivial(vertex, sign=1) -> "StringWord":
        if sign not in (1, -1):
            raise InputError("trivial string sign must be +1 or -1")
        return StringWord("trivial", vertex=vertex, sign=sign)

    @staticmethod
    def word(letters) -> "StringWord":
        letters = tuple(letters)
        if not letters:
            raise InputError("a letter word must be nonempty; use trivial/zero")
        return StringWord("word", letters=letters)

    # -- basic structure ----------------------------------------------

    @property
    def is_zero(self):
        return self.kind == "zero"

    @property
    def is_trivial(self):
        return self.kind == "trivial"

    def __len__(self):
        return len(self.letters)

    def inv(self) -> "StringWord":
        if self.is_zero:
            return self
        if self.is_trivial:
            return StringWord.trivial(self.vertex, -self.sign)
        return StringWord.word(tuple(l.inv() for l in reversed(self.letters)))

    def source(self, p: GentlePresentation):
        if self.is_zero:
            raise InputError("zero string has no endpoints")
        if self.is_trivial:
            return self.vertex
        return letter_source(p, self.letters[0])

    def target(self, p: GentlePresentation):
        if self.is_zero:
            raise InputError("zero string has no endpoints")
        if self.is_trivial:
            return self.vertex
        return letter_target(p, self.letters[-1])

    def walk_vertices(self, p: GentlePresentation):
        """Vertices visited, in order (length + 1 of them)."""
        if self.is_zero:
            return []
        if self.is_trivial:
            return [self.vertex]
        verts = [letter_source(p, self.letters[0])]
        verts.extend(letter_target(p, l) for l in self.letters)
        return verts

    def is_direct(self):
        return self.is_trivial or (self.kind == "word"
                                   and all(not l.inverse for l in self.letters))

    def is_inverse(self):
        return self.is_trivial or (self.kind == "word"
                                   and all(l.inverse for l in self.letters))

    def text(self) -> str:
        if self.is_zero:
            return "zero"
        if self.is_trivial:
            return f"triv {self.vertex} {'+' if self.sign > 0 else '-'}"
        return " ".join(l.text() for l in self.letters)

    def __repr__(self):
        return f"<{self.text()}>"

    def _key(self):
        if self.is_zero:
            return (0,)
        if self.is_trivial:
            return (1, self.vertex, -self.sign)
        return (2,) + tuple((l.arrow, l.inverse) for l in self.letters)


def sigma_of(p: GentlePresentation, w: StringWord) -> int:
    if w.is_zero:
        raise InputError("zero string has no sign data")
    if w.is_trivial:
        return -w.sign
    l = w.letters[0]
    return p.epsilon[l.arrow] if l.inverse else p.sigma[l.arrow]


def epsilon_of(p: GentlePresentation, w: StringWord) -> int:
    if w.is_zero:
        raise InputError("zero string has no sign data")
    if w.is_trivial:
        return w.sign
    l = w.letters[-1]
    return p.sigma[l.arrow] if l.inverse else p.epsilon[l.arrow]


def validate_string(p: GentlePresentation, letters) -> StringWord:
    """Build a StringWord from letters, rejecting invalid walks.

    The rejection records the first offending position (0-based index of
    the second letter of the bad pair) and a reason among
    non-composable / not-reduced / relation.
    """
    letters = [l if isinstance(l, Letter) else Letter(*l) for l in letters]
    for i, l in enumerate(letters):
        if l.arrow not in p.quiver.sources:
            raise InputError(f"unknown arrow {l.arrow!r} at position {i}")
    for i, (l1, l2) in enumerate(zip(letters, letters[1:]), start=1):
        reason = valid_pair(p, l1, l2)
        if reason is not None:
            raise StringRejection(i, reason)
    return StringWord.word(letters)


def is_valid_string(p: GentlePresentation, w: StringWord) -> bool:
    if w.is_zero or w.is_trivial:
        return w.is_zero or w.vertex in p.quiver.vertices
    try:
        validate_string(p, w.letters)
        return True
    except (StringRejection, InputError):
        return False


def compose(p: GentlePresentation, v: StringWord, w: StringWord):
    """Composition vw, or None when undefined.

    For two letter words vw is defined iff the concatenation is a
    string; compositions with trivial strings follow the sigma/epsilon
    endpoint-and-sign rule.
    """
    if v.is_zero or w.is_zero:
        raise InputError("cannot compose zero strings")
    if v.is_trivial and w.is_trivial:
        if v.vertex == w.vertex and v.sign == w.sign:
            return v
        return None
    if v.is_trivial:
        if w.source(p) == v.vertex and sigma_of(p, w) == -v.sign:
            return w
        return None
    if w.is_trivial:
        if v.target(p) == w.vertex and epsilon_of(p, v) == w.sign:
            return v
        return None
    if v.target(p) != w.source(p):
        return None
    if valid_pair(p, v.letters[-1], w.letters[0]) is not None:
        return None
    return StringWord.word(v.letters + w.letters)


def canonicalize(w: StringWord) -> StringWord:
    """The representative of {w, w^-1}: trivial strings get sign +, words
    the lexicographically smaller letter sequence."""
    if w.is_zero:
        return w
    if w.is_trivial:
        return StringWord.trivial(w.vertex, 1)
    inv = w.inv()
    return w if w._key() <= inv._key() else inv


def string_sort_key(w: StringWord):
    return (len(w.letters) if w.kind == "word" else 0,) + w._key()


# -- bands -------------------------------------------------------------


@dataclass(frozen=True)
class Band:
    """Primitive cyclic string, canonical under rotation and inversion."""

    letters: tuple

    @staticmethod
    def from_letters(p: GentlePresentation, letters) -> "Band":
        letters = tuple(l if isinstance(l, Letter) else Letter(*l) for l in letters)
        if not letters:
            raise InputError("a band needs at least one letter")
        for l in letters:
            if l.arrow not in p.quiver.sources:
                raise InputError(f"unknown arrow {l.arrow!r}")
        n = len(letters)
        for i in range(n):
            reason = valid_pair(p, letters[i], letters[(i + 1) % n])
            if reason is not None:
                raise StringRejection((i + 1) % n, f"cyclic word invalid: {reason}")
        if letter_source(p, letters[0]) != letter_target(p, letters[-1]):
            raise StringRejection(0, "non-composable")  # unreachable given pair checks
        if _is_proper_power(letters):
            raise StringRejection(0, "not primitive (proper power)")
        if all(not l.inverse for l in letters) or all(l.inverse for l in letters):
            raise StringRejection(0, "cyclic word has no direction change "
                                     "(algebra would be infinite dimensional)")
        return Band(_canonical_rotation(letters))

    def __len__(self):
        return len(self.letters)

    def text(self) -> str:
        return " ".join(l.text() for l in self.letters)

    def __repr__(self):
        return f"<band {self.text()}>"

    def power_word(self, n: int) -> tuple:
        return self.letters * n


def _is_proper_power(letters) -> bool:
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return True
    return False


def _canonical_rotation(letters) -> tuple:
    def key(seq):
        return tuple((l.arrow, l.inverse) for l in seq)

    n = len(letters)
    inv = tuple(l.inv() for l in reversed(letters))
    candidates = [tuple(letters[i:]) + tuple(letters[:i]) for i in range(n)]
    candidates += [tuple(inv[i:]) + tuple(inv[:i]) for i in range(n)]
    return min(candidates, key=key)


def all_letters(p: GentlePresentation):
    out = []
    for a in p.arrows:
        out.append(Letter(a, False))
        out.append(Letter(a, True))
    return out


def letter_graph(p: GentlePresentation):
    """Successor map of the letter graph: l1 -> l2 iff l1 l2 is a string."""
    letters = all_letters(p)
    return {l1: [l2 for l2 in letters if valid_pair(p, l1, l2) is None]
            for l1 in letters}


def detect_band(p: GentlePresentation):
    """A witness Band if one exists, else None.

    Exact decision: bands exist iff the letter graph has a directed
    cycle.  Any simple cycle yields a primitive cyclic string, and since
    gentle presentations here are finite dimensional every such cycle
    mixes direct and inverse letters.
    """
    succ = letter_graph(p)
    state = {}
    for start in sorted(succ, key=lambda l: (l.arrow, l.inverse)):
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
                    cycle = path[path.index(nxt):]
                    return Band.from_letters(p, cycle)
            if not advanced:
                state[node] = 1
                stack.pop()
                path.pop()
    return None


def enumerate_strings(p: GentlePresentation, max_len: int | None = None):
    """All strings up to inversion, one canonical representative each.

    Without a bound this is only allowed for band-free presentations,
    where the enumeration stabilizes on its own.
    """
    band = detect_band(p)
    if band is not None and max_len is None:
        raise InputError("presentation has a band; enumeration needs max_len")

    found = {canonicalize(StringWord.trivial(v)) for v in p.vertices}
    frontier = [StringWord.word((l,)) for l in all_letters(p)]
    length = 1
    while frontier and (max_len is None or length <= max_len):
        found.update(canonicalize(w) for w in frontier)
        nxt = []
        for w in frontier:
            last = w.letters[-1]
            for l2 in all_letters(p):
                if valid_pair(p, last, l2) is None:
                    nxt.append(StringWord.word(w.letters + (l2,)))
        frontier = nxt
        length += 1
    return sorted(found, key=string_sort_key)


# -- text parsing -------------------------------------------------------


def parse_string(p: GentlePresentation, text: str) -> StringWord:
    """Parse the CLI string syntax against a presentation."""
    parts = text.split()
    if not parts:
        raise InputError("empty string literal")
    if parts[0] == "zero":
        return StringWord.zero()
    if parts[0] == "triv":
        if len(parts) != 3 or parts[2] not in "+-":
            raise InputError("trivial string syntax: triv <vertex> <+|->")
        if parts[1] not in p.quiver.vertices:
            raise InputError(f"unknown vertex {parts[1]!r}")
        return StringWord.trivial(parts[1], 1 if parts[2] == "+" else -1)
    letters = []
    for tok in parts:
        if tok.endswith("-"):
            letters.append(Letter(tok[:-1], True))
        else:
            letters.append(Letter(tok, False))
    return validate_string(p, letters)


def parse_band(p: GentlePresentation, text: str) -> Band:
    parts = text.split()
    letters = [Letter(t[:-1], True) if t.endswith("-") else Letter(t, False)
               for t in parts]
    return Band.from_letters(p, letters)
