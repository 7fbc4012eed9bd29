"""Hom dimensions between string and quasi-simple band modules.

dim Hom(M(v), M(w)) counts admissible pairs: a factor decomposition
v = v1 a^-1 e b v2 of v together with a sub decomposition
w = w1 c f d^-1 w2 of w whose middles agree, f = e or f = e^-1.

Flanks may be absent at word ends (without this, trivial strings would
have no endomorphisms).  Band operands are read in their periodic
unrolling: a window may start at any rotation and may be arbitrarily
long (crossing the cut, even several full turns), and its flanking
letters are the unrolled neighbours.  Windows of length m - 1 (m the
band length) die automatically because both flanks would be the same
letter.  When two hosts are compared the window length is capped by the
other side's length, which keeps the match count finite; the finite-
field oracle confirms that these wrapped windows are exactly the ones
carrying maps between band and string modules.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .algebra import GentlePresentation, InputError
from .strings import (Band, StringWord, canonicalize, is_valid_string,
                      letter_source)


@dataclass(frozen=True)
class _HostView:
    """Uniform read access to a string or band as an indexed letter word."""

    letters: tuple
    vertices: tuple     # linear: len+1 entries; cyclic: len entries
    cyclic: bool
    trivial_vertex: str | None = None   # set for trivial strings

    def __len__(self):
        return len(self.letters)

    def letter(self, i):
        return self.letters[i % len(self.letters)] if self.cyclic else self.letters[i]

    def vertex(self, i):
        if self.trivial_vertex is not None:
            return self.trivial_vertex
        return self.vertices[i % len(self.vertices)] if self.cyclic else self.vertices[i]


def _view(p: GentlePresentation, host) -> _HostView:
    if isinstance(host, Band):
        letters = host.letters
        verts = tuple(letter_source(p, l) for l in letters)
        return _HostView(letters, verts, True)
    if isinstance(host, StringWord):
        if host.is_zero:
            raise InputError("zero string has no module")
        if host.is_trivial:
            return _HostView((), (), False, trivial_vertex=host.vertex)
        if not is_valid_string(p, host):
            raise InputError(f"not a string of this presentation: {host!r}")
        return _HostView(host.letters, tuple(host.walk_vertices(p)), False)
    raise InputError(f"expected StringWord or Band, got {type(host).__name__}")


@dataclass(frozen=True)
class Window:
    """A window of the host word: `start` and `length` in letters; the
    empty window at position k sits on the vertex between letters."""

    start: int
    length: int
    left_flank: int | None      # letter index, None at a word end
    right_flank: int | None


@dataclass(frozen=True)
class FactorDecomposition:
    host: object
    window: Window


@dataclass(frozen=True)
class SubDecomposition:
    host: object
    window: Window


def _windows(view: _HostView, left_inverse: bool, max_length: int | None = None):
    """All windows whose left flank is inverse (factor) or direct (sub),
    with the dual condition on the right flank.  For cyclic hosts the
    windows live in the periodic unrolling, up to max_length letters
    (default: one full turn)."""
    n = len(view)
    out = []
    if not view.cyclic:
        for start in range(n + 1):
            for length in range(n - start + 1):
                left = start - 1 if start > 0 else None
                right = start + length if start + length < n else None
                if left is not None and view.letter(left).inverse != left_inverse:
                    continue
                if right is not None and view.letter(right).inverse == left_inverse:
                    continue
                out.append(Window(start, length, left, right))
        return out
    cap = n if max_length is None else max(max_length, n)
    for start in range(n):
        for length in range(cap + 1):
            left = (start - 1) % n
            right = (start + length) % n
            if view.letter(left).inverse != left_inverse:
                continue
            if view.letter(right).inverse == left_inverse:
                continue
            out.append(Window(start, length, left, right))
    return out


def factor_strings(p: GentlePresentation, host, max_length: int | None = None):
    """Complete set of factor decompositions of a string or band (for
    bands: unrolled windows of up to max_length letters, default one
    full turn)."""
    view = _view(p, host)
    return [FactorDecomposition(host, w)
            for w in _windows(view, True, max_length)]


def substrings(p: GentlePresentation, host, max_length: int | None = None):
    """Complete set of sub decompositions of a string or band."""
    view = _view(p, host)
    return [SubDecomposition(host, w)
            for w in _windows(view, False, max_length)]


def window_key(p: GentlePresentation, host, w: Window):
    """Canonical key of the window word, identifying e with e^-1.
    Trivial windows carry their vertex; the sign drops out because a
    match may use either orientation."""
    view = _view(p, host)
    if w.length == 0:
        return ("triv", view.vertex(w.start))
    letters = tuple(view.letter(w.start + i) for i in range(w.length))
    word = canonicalize(StringWord.word(letters))
    return ("word",) + tuple((l.arrow, l.inverse) for l in word.letters)


@dataclass(frozen=True)
class AdmissiblePair:
    factor: FactorDecomposition
    sub: SubDecomposition
    orientation: str     # "equal" (f = e) or "inverse" (f = e^-1)


@dataclass(frozen=True)
class HomComputation:
    dim: int
    pairs: tuple      # AdmissiblePair matches
    experimental: bool


def _match_cap(other) -> int:
    """Longest window of the other operand a wrapped window could match."""
    if isinstance(other, Band):
        return len(other)
    return len(other.letters)


def _window_letters(p: GentlePresentation, host, w: Window):
    view = _view(p, host)
    return tuple(view.letter(w.start + i) for i in range(w.length))


def hom_dim_detailed(p: GentlePresentation, v, w) -> HomComputation:
    facs = factor_strings(p, v, max_length=_match_cap(w))
    subs = substrings(p, w, max_length=_match_cap(v))
    fac_keys = [(f, window_key(p, v, f.window)) for f in facs]
    sub_keys = [(s, window_key(p, w, s.window)) for s in subs]
    pairs = []
    for f, kf in fac_keys:
        for s, ks in sub_keys:
            if kf != ks:
                continue
            same = _window_letters(p, v, f.window) == _window_letters(p, w, s.window)
            pairs.append(AdmissiblePair(f, s, "equal" if same else "inverse"))
    experimental = isinstance(v, Band) and isinstance(w, Band) and v == w
    if experimental:
        warnings.warn("hom between modules over the same band omits the "
                      "phi-dependent correction; result is experimental",
                      stacklevel=2)
    return HomComputation(len(pairs), tuple(pairs), experimental)


def hom_dim(p: GentlePresentation, v, w) -> int:
    return hom_dim_detailed(p, v, w).dim


# -- independent brute-force window counts (self-test route) -----------


def _count_windows_bruteforce(p: GentlePresentation, host, left_inverse: bool,
                              max_length: int | None = None) -> int:
    """Count windows by scanning every index pair and revalidating the
    decomposition from scratch, without the flank shortcuts."""
    view = _view(p, host)
    n = len(view)
    count = 0
    if not view.cyclic:
        for start in range(n + 1):
            for end in range(start, n + 1):
                ok = True
                if start > 0:
                    piece = view.letters[start - 1]
                    ok = ok and piece.inverse == left_inverse
                if end < n:
                    piece = view.letters[end]
                    ok = ok and piece.inverse != left_inverse
                # window plus flank letters must reassemble into the host
                if ok and start < end:
                    ok = is_valid_string(p, StringWord.word(view.letters[start:end]))
                if ok:
                    count += 1
        return count
    cap = n if max_length is None else max(max_length, n)
    for start in range(n):
        for length in range(cap + 1):
            left = view.letter(start - 1)
            right = view.letter(start + length)
            if left.inverse != left_inverse:
                continue
            if right.inverse == left_inverse:
                continue
            if length:
                word = tuple(view.letter(start + i) for i in range(length))
                if not is_valid_string(p, StringWord.word(word)):
                    continue
            count += 1
    return count


def factor_count_bruteforce(p: GentlePresentation, host,
                            max_length: int | None = None) -> int:
    return _count_windows_bruteforce(p, host, True, max_length)


def sub_count_bruteforce(p: GentlePresentation, host,
                         max_length: int | None = None) -> int:
    return _count_windows_bruteforce(p, host, False, max_length)
