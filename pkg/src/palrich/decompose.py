"""Recodings of almost-rich words as morphic images of rich words.

Two constructions: coding by consecutive occurrences of special factors
(simple-path recoding) and coding by return words of a suitable palindromic
prefix (derived-word recoding), plus the pipeline specializing the latter to
words built by iterated Theta-palindromic closure.

The constants controlling "long enough" are existential in the underlying
statements, so choices of the coding length n and the prefix p are made from
empirical violation scans with a safety margin, and are recorded in the
outputs for auditability.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Alphabet,
    Antimorphism,
    InputError,
    Morphism,
    Word,
    apply_antimorphism,
    apply_morphism,
)
from .complexity import closed_under_theta, default_safe_length
from .generators import (
    ArnouxRauzyReport,
    DirectiveSequence,
    arnoux_rauzy_check,
    theta_standard_with_seed_source,
)
from .palindromes import PalIndex, defect
from .rauzy import special_factors, special_positions
from .returns import crw_palindromicity_scan, mirror_bounded_palindromicity, \
    occurrences_alternate

DEFAULT_SAFETY_MARGIN = 2


class DecomposeError(RuntimeError):
    """A decomposition pipeline cannot proceed; details in ``payload``."""

    def __init__(self, message: str, payload: Optional[dict] = None):
        super().__init__(message)
        self.payload = payload or {}


# --- simple-path recoding ----------------------------------------------------

@dataclass(frozen=True)
class SimplePathCoding:
    n: int                        # coding length actually used
    requested_n: int
    path_alphabet: Alphabet       # letters "[k]" by first occurrence
    theta2: Antimorphism
    v_prefix: Word                # word over path_alphabet
    phi: Morphism                 # path_alphabet -> original alphabet
    path_table: dict              # letter token -> underlying path Word
    occurrence_indices: tuple[int, ...]
    covered_start: int
    covered_end: int
    tail_length: int
    flags: dict

    def describe(self) -> dict:
        return {
            "n": self.n,
            "requested_n": self.requested_n,
            "alphabet": {tok: w.text for tok, w in self.path_table.items()},
            "theta2": self.theta2.describe(),
            "morphism": self.phi.describe(),
            "v_prefix": self.v_prefix.text,
            "covered": [self.covered_start, self.covered_end],
            "uncovered_tail": self.tail_length,
            "flags": self.flags,
        }


def _smallest_period(sym: tuple) -> int:
    # classic failure-function period of the whole word
    n = len(sym)
    fail = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k and sym[i] != sym[k]:
            k = fail[k]
        if sym[i] == sym[k]:
            k += 1
        fail[i + 1] = k
    return n - fail[n]


def _periodic_coding(theta: Antimorphism, prefix: Word, n: int) -> SimplePathCoding:
    sym = prefix.symbols
    p = _smallest_period(sym)
    if p > len(sym) // 2:
        raise DecomposeError(
            "no special factors and no short period: prefix too short to decide",
            {"smallest_period": p, "prefix_length": len(sym)})
    period = Word(prefix.alphabet, sym[:p])
    b = Alphabet(("[0]",))
    theta2 = Antimorphism.reversal(b)
    count = len(sym) // p
    v = Word(b, (0,) * count)
    phi = Morphism(b, prefix.alphabet, (period,))
    return SimplePathCoding(
        n=n, requested_n=n, path_alphabet=b, theta2=theta2, v_prefix=v,
        phi=phi, path_table={"[0]": period},
        occurrence_indices=tuple(range(0, count * p, p)),
        covered_start=0, covered_end=count * p, tail_length=len(sym) - count * p,
        flags={"periodic": True, "period_length": p})


def theorem1_decompose(theta: Antimorphism, prefix: Word, n: int,
                       search_budget: int = 64) -> SimplePathCoding:
    """Recode the prefix over the alphabet of its n-simple paths.

    The coding length is bumped to the smallest n' >= n whose length-n'
    prefix is special (so the coding starts at position 0); eventually
    periodic inputs take the unary branch.  Requires the factor set to be
    closed under Theta at the chosen length.
    """
    if theta.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    if not 1 <= n <= len(prefix) // 4:
        raise InputError(f"coding length {n} unreasonable for |prefix|={len(prefix)}")

    spec = special_factors(prefix, n)
    if not spec.special:
        return _periodic_coding(theta, prefix, n)

    chosen = None
    for cand in range(n, min(n + search_budget, len(prefix) // 4) + 1):
        sp = special_factors(prefix, cand)
        if not sp.special:
            break
        head = prefix.factor(0, cand)
        if head in sp.special:
            chosen = cand
            break
    flags: dict = {}
    if chosen is None:
        chosen = n
        flags["aligned_at_first_special"] = True

    closed, witness = closed_under_theta(theta, prefix, chosen)
    if not closed:
        raise DecomposeError(
            "factor set is not closed under Theta at the coding length",
            {"n": chosen, "witness": witness.text if witness else None})

    positions = special_positions(prefix, chosen)
    if len(positions) < 2:
        raise DecomposeError("fewer than two special-factor occurrences witnessed",
                             {"n": chosen})
    if positions[0] != 0:
        flags["aligned_at"] = positions[0]

    sym = prefix.symbols
    pair = theta.pairing
    letter_of: dict[tuple, int] = {}
    paths: list[tuple] = []
    v_sym: list[int] = []
    for a, b_pos in zip(positions, positions[1:]):
        e = sym[a:b_pos + chosen]
        if e not in letter_of:
            letter_of[e] = len(paths)
            paths.append(e)
        v_sym.append(letter_of[e])

    pairing = []
    for e in paths:
        te = tuple(pair[x] for x in reversed(e))
        if te not in letter_of:
            raise DecomposeError(
                "Theta-image of a simple path not witnessed; prefix too short",
                {"n": chosen, "path": Word(prefix.alphabet, e).text})
        pairing.append(letter_of[te])

    b_alpha = Alphabet(tuple(f"[{k}]" for k in range(len(paths))))
    theta2 = Antimorphism(b_alpha, tuple(pairing))
    images = tuple(Word(prefix.alphabet, e[:len(e) - chosen]) for e in paths)
    phi = Morphism(b_alpha, prefix.alphabet, images)
    v = Word(b_alpha, tuple(v_sym))
    path_table = {b_alpha.letters[k]: Word(prefix.alphabet, e)
                  for k, e in enumerate(paths)}

    covered = apply_morphism(phi, v)
    expected = sym[positions[0]:positions[-1]]
    if covered.symbols != expected:
        raise AssertionError("refactorization mismatch; coding bug")

    return SimplePathCoding(
        n=chosen, requested_n=n, path_alphabet=b_alpha, theta2=theta2,
        v_prefix=v, phi=phi, path_table=path_table,
        occurrence_indices=tuple(positions),
        covered_start=positions[0], covered_end=positions[-1],
        tail_length=len(sym) - positions[-1], flags=flags)


@dataclass(frozen=True)
class RichnessConditionsReport:
    """The two sufficient conditions for richness of a recoded word."""

    condition_i: bool
    condition_i_witnesses: tuple[Word, ...]
    condition_ii: bool
    condition_ii_witness: Optional[str]
    max_factor_len: int

    @property
    def both(self) -> bool:
        return self.condition_i and self.condition_ii

    def describe(self) -> dict:
        return {
            "condition_i": self.condition_i,
            "condition_i_witnesses": [w.text for w in self.condition_i_witnesses],
            "condition_ii": self.condition_ii,
            "condition_ii_witness": self.condition_ii_witness,
            "max_factor_len": self.max_factor_len,
        }


def richness_conditions_check(theta2: Antimorphism, v_prefix: Word,
                              max_factor_len: Optional[int] = None
                              ) -> RichnessConditionsReport:
    """Mirror-bounded palindromicity for every factor, plus letter-image
    occurrence alternation.

    Condition (i) is scanned over all distinct factors up to
    ``max_factor_len`` (default: half the prefix, capped at 64).
    """
    if len(v_prefix) == 0:
        raise InputError("empty recoded prefix")
    if max_factor_len is None:
        max_factor_len = min(max(1, len(v_prefix) // 2), 64)
    sym = v_prefix.symbols
    witnesses: list[Word] = []
    for length in range(1, max_factor_len + 1):
        seen: set[tuple] = set()
        for i in range(len(sym) - length + 1):
            f = sym[i:i + length]
            if f in seen:
                continue
            seen.add(f)
            ok, wit = mirror_bounded_palindromicity(
                theta2, v_prefix, Word(v_prefix.alphabet, f))
            if not ok:
                witnesses.extend(wit)
    cond_ii = True
    cond_ii_witness = None
    for a in range(len(theta2.alphabet)):
        if theta2.pairing[a] == a:
            continue
        ok, idx = occurrences_alternate(
            theta2, v_prefix, Word(v_prefix.alphabet, (a,)))
        if not ok:
            cond_ii = False
            cond_ii_witness = f"letter {theta2.alphabet.letters[a]} at index {idx}"
            break
    return RichnessConditionsReport(
        condition_i=not witnesses,
        condition_i_witnesses=tuple(witnesses[:8]),
        condition_ii=cond_ii, condition_ii_witness=cond_ii_witness,
        max_factor_len=max_factor_len)


# --- return-word recoding ----------------------------------------------------

@dataclass(frozen=True)
class ReturnWordCoding:
    p: Word
    return_alphabet: Alphabet     # "1".."M" in first-occurrence order
    returns: tuple[Word, ...]
    phi: Morphism
    v_prefix: Word
    occurrence_indices: tuple[int, ...]
    covered_length: int
    tail_length: int
    eq3_ok: bool

    @property
    def m(self) -> int:
        return len(self.returns)

    def describe(self) -> dict:
        return {
            "p": self.p.text,
            "M": self.m,
            "returns": {self.return_alphabet.letters[i]: q.text
                        for i, q in enumerate(self.returns)},
            "morphism": self.phi.describe(),
            "v_prefix": self.v_prefix.text,
            "covered_length": self.covered_length,
            "uncovered_tail": self.tail_length,
            "eq3_ok": self.eq3_ok,
        }


def verify_eq3(theta: Antimorphism, p: Word, q: Word) -> bool:
    """Letter-for-letter check of p Theta(q) = q p."""
    return (p + apply_antimorphism(theta, q)).symbols == (q + p).symbols


def verify_eq4(theta: Antimorphism, phi: Morphism, p: Word, w: Word) -> bool:
    """Letter-for-letter check of Theta(phi(w) p) = phi(reverse(w)) p."""
    lhs = apply_antimorphism(theta, apply_morphism(phi, w) + p)
    rev = Word(w.alphabet, tuple(reversed(w.symbols)))
    rhs = apply_morphism(phi, rev) + p
    return lhs.symbols == rhs.symbols


def _pal_prefix_lengths(theta: Antimorphism, prefix: Word) -> list[int]:
    # lengths L >= 1 such that prefix[:L] is a Theta-palindrome; via PalIndex:
    # the prefix of length L is a palindrome iff its lps is the whole prefix
    idx = PalIndex(theta)
    out = []
    for k, s in enumerate(prefix.symbols, start=1):
        idx.append(s)
        if idx.lps_length == k:
            out.append(k)
    return out


def _build_return_coding(theta: Antimorphism, prefix: Word,
                         p: Word) -> ReturnWordCoding:
    from .core import occurrences

    sym = prefix.symbols
    occ = occurrences(prefix, p)
    letter_of: dict[tuple, int] = {}
    returns: list[tuple] = []
    v_sym: list[int] = []
    for a, b in zip(occ, occ[1:]):
        q = sym[a:b]
        if q not in letter_of:
            letter_of[q] = len(returns)
            returns.append(q)
        v_sym.append(letter_of[q])
    b_alpha = Alphabet(tuple(str(i + 1) for i in range(len(returns))))
    ret_words = tuple(Word(prefix.alphabet, q) for q in returns)
    phi = Morphism(b_alpha, prefix.alphabet, ret_words)
    v = Word(b_alpha, tuple(v_sym))
    covered = apply_morphism(phi, v)
    if covered.symbols != sym[:occ[-1]]:
        raise AssertionError("return-word refactorization mismatch; coding bug")
    eq3_ok = all(verify_eq3(theta, p, q) for q in ret_words)
    return ReturnWordCoding(
        p=p, return_alphabet=b_alpha, returns=ret_words, phi=phi, v_prefix=v,
        occurrence_indices=tuple(occ), covered_length=occ[-1],
        tail_length=len(sym) - occ[-1], eq3_ok=eq3_ok)


def theorem2_decompose(theta: Antimorphism, prefix: Word,
                       p_hint: Optional[Word] = None,
                       margin: int = DEFAULT_SAFETY_MARGIN,
                       max_candidates: int = 16) -> ReturnWordCoding:
    """Derived-word recoding over the return words of a Theta-palindromic
    prefix p.

    Without a hint, p is the shortest Theta-palindromic prefix whose length
    clears the empirical complete-return-word threshold (times the safety
    margin) and whose witnessed complete returns are all Theta-palindromes.
    """
    from .core import occurrences, symbols_are_theta_palindrome

    if theta.alphabet != prefix.alphabet:
        raise InputError("alphabet mismatch")
    sym = prefix.symbols

    def qualifies(p: Word) -> tuple[bool, Optional[dict]]:
        occ = occurrences(prefix, p)
        if len(occ) < 3:
            return False, {"p": p.text, "reason": "fewer than 3 occurrences"}
        for a, b in zip(occ, occ[1:]):
            cr = sym[a:b + len(p)]
            if not symbols_are_theta_palindrome(theta.pairing, cr):
                return False, {"p": p.text,
                               "violating_return": Word(prefix.alphabet, cr).text}
        return True, None

    if p_hint is not None:
        if p_hint.symbols != sym[:len(p_hint)]:
            raise DecomposeError("p_hint is not a prefix of the word",
                                 {"p": p_hint.text})
        if not symbols_are_theta_palindrome(theta.pairing, p_hint.symbols):
            raise DecomposeError("p_hint is not a Theta-palindrome",
                                 {"p": p_hint.text})
        ok, info = qualifies(p_hint)
        if not ok:
            raise DecomposeError("hinted p has a non-palindromic complete return "
                                 "or too few occurrences", info)
        return _build_return_coding(theta, prefix, p_hint)

    scan = crw_palindromicity_scan(theta, prefix)
    worst = max((len(v.factor) for v in scan.violations), default=0)
    target = max(1, margin * worst)
    best_failure: Optional[dict] = None
    tried = 0
    for length in _pal_prefix_lengths(theta, prefix):
        if length < target:
            continue
        if length > len(prefix) // 4:
            break
        tried += 1
        if tried > max_candidates:
            break
        p = prefix.factor(0, length)
        ok, info = qualifies(p)
        if ok:
            return _build_return_coding(theta, prefix, p)
        best_failure = info
    raise DecomposeError(
        "no qualifying Theta-palindromic prefix found",
        {"empirical_threshold": target, "best_candidate": best_failure})


# --- full pipeline for closure-generated words -------------------------------

def theorem3_pipeline(theta: Antimorphism, seed: Word, d: DirectiveSequence,
                      scale: int,
                      margin: int = DEFAULT_SAFETY_MARGIN) -> dict:
    """Generate a word by iterated Theta-palindromic closure, recode it over
    the return words of a bispecial Theta-palindromic prefix, and check the
    announced properties of the result.

    Checks: derived alphabet size M bounded by the source alphabet size,
    return words ending with distinct letters, and the Arnoux-Rauzy test on
    the derived prefix.
    """
    src = theta_standard_with_seed_source(theta, seed, d)
    u = src.prefix(scale)

    scan = crw_palindromicity_scan(theta, u)
    worst = max((len(v.factor) for v in scan.violations), default=0)
    target = max(1, margin * worst)

    chosen: Optional[Word] = None
    for length in _pal_prefix_lengths(theta, u):
        if length < target or length > len(u) // 4:
            continue
        p = u.factor(0, length)
        spec = special_factors(u, length)
        if p in spec.bispecial:
            chosen = p
            break
    if chosen is None:
        raise DecomposeError(
            "no bispecial Theta-palindromic prefix above the empirical threshold",
            {"empirical_threshold": target, "scale": scale})

    coding = theorem2_decompose(theta, u, p_hint=chosen, margin=margin)
    m = coding.m
    size_ok = m <= len(theta.alphabet)
    last_letters = [q.symbols[-1] for q in coding.returns]
    distinct_ok = len(set(last_letters)) == len(last_letters)
    v = coding.v_prefix
    ar: ArnouxRauzyReport = arnoux_rauzy_check(
        v, max_len=default_safe_length(len(v)), valence=m)
    v_defect = defect(Antimorphism.reversal(v.alphabet), v)
    return {
        "source": src.describe(),
        "scale": scale,
        "p": chosen.text,
        "empirical_threshold": target,
        "coding": coding.describe(),
        "checks": {
            "alphabet_bound": size_ok,
            "M": m,
            "source_alphabet_size": len(theta.alphabet),
            "returns_end_with_distinct_letters": distinct_ok,
            "arnoux_rauzy": ar.describe(),
            "derived_defect": v_defect,
        },
        "ok": bool(size_ok and distinct_ok and ar.ok and coding.eq3_ok),
    }
