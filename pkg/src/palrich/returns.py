"""Return words, occurrence alternation and finite-defect scans.

The constants appearing in the finite-defect characterizations are
existential, so every scan here reports empirical thresholds observed on the
analyzed prefix ("no violations for lengths >= L") instead of booleans about
the infinite word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Antimorphism,
    InputError,
    Word,
    occurrences,
    symbols_are_theta_palindrome,
)
from .palindromes import PalIndex


@dataclass(frozen=True)
class ReturnStructure:
    factor: Word
    occurrence_indices: tuple[int, ...]
    complete_returns: tuple[Word, ...]   # first-occurrence order, deduplicated
    returns: tuple[Word, ...]            # complete returns minus trailing factor


def return_structure(prefix: Word, w: Word) -> ReturnStructure:
    """Complete return words of w witnessed in the prefix.

    Each complete return spans two consecutive occurrences of w; the plain
    return words drop the trailing w.
    """
    occ = occurrences(prefix, w)
    if len(occ) < 2:
        raise InputError(
            f"factor occurs {len(occ)} time(s); need at least 2 for return words")
    seen: set[tuple] = set()
    crs: list[Word] = []
    rets: list[Word] = []
    sym = prefix.symbols
    m = len(w)
    for a, b in zip(occ, occ[1:]):
        cr = sym[a:b + m]
        if cr not in seen:
            seen.add(cr)
            crs.append(Word(prefix.alphabet, cr))
            rets.append(Word(prefix.alphabet, sym[a:b]))
    return ReturnStructure(factor=w, occurrence_indices=tuple(occ),
                           complete_returns=tuple(crs), returns=tuple(rets))


def occurrences_alternate(theta: Antimorphism, prefix: Word,
                          w: Word) -> tuple[bool, Optional[int]]:
    """Do occurrences of w and Theta(w) strictly alternate in the prefix?

    Trivially true when w is a Theta-palindrome.  Returns the index of the
    first occurrence breaking the alternation otherwise.
    """
    if theta.alphabet != prefix.alphabet or w.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    pair = theta.pairing
    tw = tuple(pair[x] for x in reversed(w.symbols))
    if tw == w.symbols:
        return True, None
    occ_w = occurrences(prefix, w)
    occ_t = occurrences(prefix, Word(prefix.alphabet, tw))
    merged = sorted([(i, 0) for i in occ_w] + [(i, 1) for i in occ_t])
    for (i1, l1), (i2, l2) in zip(merged, merged[1:]):
        if l1 == l2:
            return False, i2
    return True, None


def mirror_bounded_palindromicity(theta: Antimorphism, prefix: Word,
                                  w: Word) -> tuple[bool, list[Word]]:
    """Check every minimal factor from w to Theta(w) for Theta-palindromicity.

    A witnessed factor begins with w, ends with Theta(w), and has no other
    occurrence of either; all such factors must be Theta-palindromes.
    """
    if theta.alphabet != prefix.alphabet or w.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    pair = theta.pairing
    sym = prefix.symbols
    m = len(w)
    tw = tuple(pair[x] for x in reversed(w.symbols))
    occ_w = occurrences(prefix, w)
    occ_t = occurrences(prefix, Word(prefix.alphabet, tw)) if tw != w.symbols else occ_w
    set_w, set_t = set(occ_w), set(occ_t)
    marks = sorted(set_w | set_t)
    witnesses: list[Word] = []
    seen: set[tuple] = set()
    # minimal segments: a w-occurrence immediately followed (in the merged
    # occurrence order) by a Theta(w)-occurrence
    for i1, i2 in zip(marks, marks[1:]):
        if not (i1 in set_w and i2 in set_t):
            continue
        seg = sym[i1:i2 + m]
        if seg in seen:
            continue
        seen.add(seg)
        if not symbols_are_theta_palindrome(pair, seg):
            witnesses.append(Word(prefix.alphabet, seg))
    return (len(witnesses) == 0), witnesses


@dataclass(frozen=True)
class CrwViolation:
    factor: Word
    complete_return: Word


@dataclass(frozen=True)
class CrwReport:
    min_len: int
    checked_factors: int
    violations: tuple[CrwViolation, ...]
    empirical_threshold: int   # smallest length with no violations at or above it

    @property
    def clean(self) -> bool:
        return not self.violations

    def describe(self) -> dict:
        return {
            "min_len": self.min_len,
            "checked_factors": self.checked_factors,
            "violations": [
                {"factor": v.factor.text, "complete_return": v.complete_return.text}
                for v in self.violations
            ],
            "empirical_threshold": self.empirical_threshold,
        }


def crw_palindromicity_scan(theta: Antimorphism, prefix: Word,
                            min_len: int = 1) -> CrwReport:
    """Check complete returns of every Theta-palindromic factor for
    Theta-palindromicity.

    Scans all Theta-palindromic factors of length >= min_len occurring at
    least twice; the empirical threshold is one more than the longest
    violating factor (a stand-in for the existential constant of the
    finite-defect characterization).
    """
    if theta.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    idx = PalIndex(theta)
    idx.extend(prefix.symbols)
    pair = theta.pairing
    violations: list[CrwViolation] = []
    checked = 0
    worst = 0
    for w in sorted(idx.palindromes(), key=lambda x: (len(x), x.symbols)):
        if len(w) < max(1, min_len):
            continue
        occ = occurrences(prefix, w)
        if len(occ) < 2:
            continue
        checked += 1
        rs = return_structure(prefix, w)
        for cr in rs.complete_returns:
            if not symbols_are_theta_palindrome(pair, cr.symbols):
                violations.append(CrwViolation(factor=w, complete_return=cr))
                worst = max(worst, len(w))
    return CrwReport(min_len=min_len, checked_factors=checked,
                     violations=tuple(violations),
                     empirical_threshold=max(min_len, worst + 1))


FULL_SCAN_LIMIT = 5000


def unioccurrent_lps_scan(theta: Antimorphism, prefix: Word,
                          full: bool = False) -> Optional[int]:
    """Last position where the longest Theta-palindromic suffix fails to be
    unioccurrent; None if no violation.

    Default mode scans prefixes of the word only (a violation at prefix
    length k is exactly a defect increment d_k - d_{k-1} = 1).  Full mode
    additionally scans every factor, which is quadratic and therefore gated
    to |prefix| <= 5000.
    """
    if theta.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    sym = prefix.symbols
    last: Optional[int] = None
    if not full:
        idx = PalIndex(theta)
        prev = 0
        for k, s in enumerate(sym, start=1):
            idx.append(s)
            d = idx.defect
            if d > prev:
                last = k
            prev = d
        return last
    if len(sym) > FULL_SCAN_LIMIT:
        raise InputError(
            f"full scan is quadratic; limited to |prefix| <= {FULL_SCAN_LIMIT}")
    for start in range(len(sym)):
        idx = PalIndex(theta)
        prev = 0
        for off, s in enumerate(sym[start:], start=1):
            idx.append(s)
            d = idx.defect
            if d > prev:
                end = start + off
                if last is None or end > last:
                    last = end
            prev = d
    return last
