"""Distinct Theta-palindromic factors, defect, closure and suffix queries.

Two routes are provided on purpose: a quadratic oracle that materializes the
factor set directly from the definition, and ``PalIndex``, an incremental
generalized palindromic tree.  A Theta-palindrome ending with letter ``a``
must begin with ``Theta(a)``, so the classical suffix-link walk looks for the
preceding letter ``Theta(a)`` instead of ``a``, and a length-1 node exists
only for letters fixed by Theta.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Antimorphism,
    InputError,
    Word,
    apply_antimorphism,
    symbols_are_theta_palindrome,
)


class _Node:
    __slots__ = ("length", "link", "next", "first_end", "ends")

    def __init__(self, length: int):
        self.length = length
        self.link: "_Node" = self  # patched right after construction
        self.next: dict[int, "_Node"] = {}
        self.first_end = -1
        self.ends = 0  # positions where this palindrome is the longest pal suffix


@dataclass(frozen=True)
class AppendReport:
    """Outcome of one PalIndex append.

    Lengths instead of materialized words keep appends O(1); use
    ``PalIndex.word_at`` to recover the actual factors.
    """

    end: int                       # index of the appended letter
    new_palindrome_length: Optional[int]   # None if no new palindrome arose
    lps_length: int                # longest Theta-palindromic suffix of w[:end+1]
    lps_unioccurrent: bool


class PalIndex:
    """Incremental index of distinct Theta-palindromic factors.

    Single-writer: appends are strictly sequential.  A frozen index is safe
    for concurrent read-only queries.
    """

    def __init__(self, theta: Antimorphism):
        self.theta = theta
        self._pair = theta.pairing
        self._sym: list[int] = []
        self._root_m1 = _Node(-1)
        self._root_0 = _Node(0)
        self._root_0.link = self._root_m1
        self._nodes: list[_Node] = [self._root_m1, self._root_0]
        self._last = self._root_0
        self._pal_count = 1  # epsilon
        self._gamma_pairs: set[tuple[int, int]] = set()
        self._defects: list[int] = [0]

    # -- queries --------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._sym)

    @property
    def pal_count(self) -> int:
        """#PalTheta of the processed prefix, epsilon included."""
        return self._pal_count

    @property
    def gamma(self) -> int:
        return len(self._gamma_pairs)

    @property
    def defect(self) -> int:
        return self._defects[-1]

    @property
    def defect_values(self) -> list[int]:
        """d_k for every prefix length k processed so far."""
        return list(self._defects)

    @property
    def lps_length(self) -> int:
        return self._last.length

    def word_at(self, end: int, length: int) -> Word:
        return Word(self.theta.alphabet,
                    tuple(self._sym[end + 1 - length:end + 1]))

    def lps_word(self) -> Word:
        return self.word_at(len(self._sym) - 1, self._last.length)

    def processed_word(self) -> Word:
        return Word(self.theta.alphabet, tuple(self._sym))

    def palindromes(self) -> set[Word]:
        """All distinct Theta-palindromic factors seen, epsilon included."""
        out = {Word(self.theta.alphabet, ())}
        for node in self._nodes[2:]:
            out.add(self.word_at(node.first_end, node.length))
        return out

    def occurrence_count(self, w: Word) -> int:
        """Occurrences of a Theta-palindromic factor in the processed prefix.

        Computed on demand by summing link-tree subtree ends counts.
        """
        target = None
        for node in self._nodes[2:]:
            if node.length == len(w) and \
                    tuple(self._sym[node.first_end + 1 - node.length:node.first_end + 1]) == w.symbols:
                target = node
                break
        if target is None:
            return 0
        totals = {id(n): n.ends for n in self._nodes}
        for node in reversed(self._nodes[2:]):
            totals[id(node.link)] += totals[id(node)]
        return totals[id(target)]

    # -- construction ---------------------------------------------------------

    def _walk(self, node: _Node, pos: int, ta: int, a: int) -> Optional[_Node]:
        sym = self._sym
        while True:
            length = node.length
            if length == -1:
                return node if ta == a else None
            i = pos - length - 1
            if i >= 0 and sym[i] == ta:
                return node
            node = node.link

    def append(self, a: int) -> AppendReport:
        if not 0 <= a < len(self.theta.alphabet):
            raise InputError(f"invalid letter index {a}")
        sym = self._sym
        sym.append(a)
        pos = len(sym) - 1
        ta = self._pair[a]

        found = self._walk(self._last, pos, ta, a)
        new_len: Optional[int] = None
        unioccurrent = False
        if found is None:
            self._last = self._root_0
        else:
            node = found.next.get(a)
            if node is not None:
                node.ends += 1
                self._last = node
            else:
                node = _Node(found.length + 2)
                if node.length == 1:
                    node.link = self._root_0
                else:
                    up = self._walk(found.link, pos, ta, a)
                    node.link = self._root_0 if up is None else up.next[a]
                node.first_end = pos
                node.ends = 1
                found.next[a] = node
                self._nodes.append(node)
                self._pal_count += 1
                self._last = node
                new_len = node.length
                unioccurrent = True

        if ta != a:
            self._gamma_pairs.add((min(a, ta), max(a, ta)))
        self._defects.append(len(sym) + 1 - len(self._gamma_pairs) - self._pal_count)
        return AppendReport(end=pos, new_palindrome_length=new_len,
                            lps_length=self._last.length,
                            lps_unioccurrent=unioccurrent)

    def extend(self, symbols) -> None:
        for s in symbols:
            self.append(s)


@dataclass(frozen=True)
class DefectProfile:
    """Per-prefix defect values d_0..d_|w| with the matching gamma/pal counts."""

    word: Word
    values: tuple[int, ...]
    gammas: tuple[int, ...]
    pal_counts: tuple[int, ...]

    def final(self) -> int:
        return self.values[-1]

    def to_csv(self) -> str:
        lines = ["prefix_length,defect,gamma,pal_count"]
        for k, (d, g, p) in enumerate(zip(self.values, self.gammas, self.pal_counts)):
            lines.append(f"{k},{d},{g},{p}")
        return "\n".join(lines) + "\n"


# --- oracle ------------------------------------------------------------------

def distinct_theta_palindromes_naive(theta: Antimorphism, w: Word) -> set[Word]:
    """Exact set of Theta-palindromic factors, epsilon included.

    Dynamic programming over factor spans; quadratic, intended as the oracle
    for small words.
    """
    if theta.alphabet != w.alphabet:
        raise InputError("alphabet mismatch")
    s = w.symbols
    pair = theta.pairing
    n = len(s)
    out: set[Word] = {Word(w.alphabet, ())}
    # prevK[i] == factor of length K starting at i is a Theta-palindrome
    prev2 = bytearray(b"\x01" * (n + 1))  # length 0 spans: all palindromic
    prev1 = bytearray(n)
    for i in range(n):
        if s[i] == pair[s[i]]:
            prev1[i] = 1
            out.add(Word(w.alphabet, s[i:i + 1]))
    for length in range(2, n + 1):
        cur = bytearray(n - length + 1)
        inner = prev2 if length % 2 == 0 else prev1
        for i in range(n - length + 1):
            j = i + length - 1
            if s[i] == pair[s[j]] and inner[i + 1]:
                cur[i] = 1
                out.add(Word(w.alphabet, s[i:j + 1]))
        if length % 2 == 0:
            prev2 = cur
        else:
            prev1 = cur
    return out


_HASH_MOD = (1 << 61) - 1
_HASH_BASE = 1_000_003


def count_theta_palindromes_expand(theta: Antimorphism, w: Word) -> int:
    """Count distinct Theta-palindromic factors by center expansion.

    Independent of PalIndex: every palindromic occurrence is enumerated by
    expanding around its center, and distinct factors are deduplicated with a
    rolling hash.  O(n + occurrences), which is O(n^2) in the worst case.
    """
    if theta.alphabet != w.alphabet:
        raise InputError("alphabet mismatch")
    s = w.symbols
    pair = theta.pairing
    n = len(s)
    h = [0] * (n + 1)
    pw = [1] * (n + 1)
    for i, x in enumerate(s):
        h[i + 1] = (h[i] * _HASH_BASE + x + 1) % _HASH_MOD
        pw[i + 1] = (pw[i] * _HASH_BASE) % _HASH_MOD
    seen: set[tuple[int, int]] = set()

    def expand(i: int, j: int) -> None:
        while True:
            seen.add((j - i + 1, (h[j + 1] - h[i] * pw[j + 1 - i]) % _HASH_MOD))
            if i == 0 or j == n - 1 or s[i - 1] != pair[s[j + 1]]:
                return
            i -= 1
            j += 1

    for c in range(n):
        if s[c] == pair[s[c]]:
            expand(c, c)
        if c + 1 < n and s[c] == pair[s[c + 1]]:
            expand(c, c + 1)
    return len(seen) + 1  # epsilon


# --- derived operations ------------------------------------------------------

def defect(theta: Antimorphism, w: Word) -> int:
    """Theta-palindromic defect |w| + 1 - gamma - #Pal, via PalIndex."""
    idx = PalIndex(theta)
    idx.extend(w.symbols)
    d = idx.defect
    assert d >= 0, "palindrome count bound violated; index bug"
    return d


def defect_profile(theta: Antimorphism, w: Word) -> DefectProfile:
    idx = PalIndex(theta)
    gammas = [0]
    pals = [1]
    for s in w.symbols:
        idx.append(s)
        gammas.append(idx.gamma)
        pals.append(idx.pal_count)
    return DefectProfile(word=w, values=tuple(idx.defect_values),
                         gammas=tuple(gammas), pal_counts=tuple(pals))


def longest_theta_pal_suffix(theta: Antimorphism, w: Word) -> Word:
    idx = PalIndex(theta)
    idx.extend(w.symbols)
    return idx.lps_word()


def theta_pal_closure(theta: Antimorphism, w: Word) -> Word:
    """Shortest Theta-palindrome having w as a prefix.

    With w = p s, s the longest Theta-palindromic suffix, the closure is
    w Theta(p).
    """
    idx = PalIndex(theta)
    idx.extend(w.symbols)
    p_len = len(w) - idx.lps_length
    pair = theta.pairing
    tail = tuple(pair[x] for x in reversed(w.symbols[:p_len]))
    return Word(w.alphabet, w.symbols + tail)


def is_rich_finite(theta: Antimorphism, w: Word) -> bool:
    return defect(theta, w) == 0
