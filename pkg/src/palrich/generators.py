"""Deterministic infinite-word sources for the analysis corpus.

Periodic words, the Thue-Morse word, standard episturmian words via iterated
palindromic closure, and Theta-standard words with seed via iterated
Theta-palindromic closure.  Every source yields consistent prefixes:
``prefix(m)`` is a prefix of ``prefix(n)`` for m <= n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Alphabet, Antimorphism, InputError, Word
from .palindromes import PalIndex
from .rauzy import special_factors
from .complexity import closed_under_theta


@dataclass(frozen=True)
class DirectiveSequence:
    """Eventually periodic directive: preperiod then repeated period."""

    pre: Word
    period: Word

    def __post_init__(self):
        if len(self.period) == 0:
            raise InputError("directive period must be non-empty")
        if self.pre.alphabet != self.period.alphabet:
            raise InputError("directive pre/period over different alphabets")

    @property
    def alphabet(self) -> Alphabet:
        return self.period.alphabet

    def letter(self, k: int) -> int:
        """k-th directive letter index, k >= 0."""
        if k < len(self.pre):
            return self.pre.symbols[k]
        return self.period.symbols[(k - len(self.pre)) % len(self.period)]

    def describe(self) -> dict:
        return {"pre": self.pre.text, "period": self.period.text}

    @classmethod
    def parse(cls, alphabet: Alphabet, pre: str, period: str,
              tokens: bool = False) -> "DirectiveSequence":
        return cls(Word.from_text(alphabet, pre, tokens),
                   Word.from_text(alphabet, period, tokens))


class WordSource:
    """Base class: deterministic prefix generator over a fixed alphabet."""

    kind: str
    alphabet: Alphabet

    def prefix(self, n: int) -> Word:
        raise NotImplementedError

    def describe(self) -> dict:
        return {"kind": self.kind, "letters": list(self.alphabet.letters)}


class PeriodicSource(WordSource):
    kind = "periodic"

    def __init__(self, period: Word):
        if len(period) == 0:
            raise InputError("period must be non-empty")
        self.alphabet = period.alphabet
        self.period = period

    def prefix(self, n: int) -> Word:
        p = self.period.symbols
        reps = n // len(p) + 1
        return Word(self.alphabet, (p * reps)[:n])

    def describe(self) -> dict:
        return {**super().describe(), "period": self.period.text}


class ThueMorseSource(WordSource):
    """Fixed point of a -> ab, b -> ba, starting with a."""

    kind = "thue_morse"

    def __init__(self, letters: tuple[str, str] = ("a", "b")):
        self.alphabet = Alphabet(letters)

    def prefix(self, n: int) -> Word:
        return Word(self.alphabet,
                    tuple(bin(i).count("1") & 1 for i in range(n)))


class ClosureSource(WordSource):
    """Iterated Theta-palindromic closure directed by a directive sequence.

    w_0 is the closure of the seed; w_{k+1} is the closure of w_k followed
    by the next directive letter.  The classical episturmian construction is
    the special case Theta = reversal, empty seed.
    """

    kind = "theta_standard_seed"

    def __init__(self, theta: Antimorphism, seed: Word, directive: DirectiveSequence):
        if seed.alphabet != theta.alphabet or directive.alphabet != theta.alphabet:
            raise InputError("seed/directive must be over the antimorphism alphabet")
        self.alphabet = theta.alphabet
        self.theta = theta
        self.seed = seed
        self.directive = directive
        self._pair = theta.pairing
        self._idx = PalIndex(theta)
        self._buf: list[int] = []
        self._steps = 0
        self.construction_log: list[dict] = []
        self._close(list(seed.symbols), step=0, letter=None)

    def _close(self, extra: list[int], step: int, letter: Optional[int]) -> None:
        # append pending letters, then complete to the Theta-palindromic closure
        for s in extra:
            self._idx.append(s)
            self._buf.append(s)
        p_len = len(self._buf) - self._idx.lps_length
        pair = self._pair
        for x in reversed(self._buf[:p_len]):
            t = pair[x]
            self._idx.append(t)
            self._buf.append(t)
        self.construction_log.append({
            "step": step,
            "letter": None if letter is None else self.alphabet.letters[letter],
            "length": len(self._buf),
        })

    def _grow_to(self, n: int) -> None:
        while len(self._buf) < n:
            self._steps += 1
            letter = self.directive.letter(self._steps - 1)
            self._close([letter], step=self._steps, letter=letter)

    def prefix(self, n: int) -> Word:
        self._grow_to(n)
        return Word(self.alphabet, tuple(self._buf[:n]))

    def describe(self) -> dict:
        return {
            **super().describe(),
            "seed": self.seed.text,
            "directive": self.directive.describe(),
            "antimorphism": self.theta.describe(),
        }


def periodic_source(p: Word) -> PeriodicSource:
    return PeriodicSource(p)


def thue_morse_source() -> ThueMorseSource:
    return ThueMorseSource()


def episturmian_source(d: DirectiveSequence) -> ClosureSource:
    """Standard episturmian word: iterated reversal-closure, empty seed."""
    theta = Antimorphism.reversal(d.alphabet)
    src = ClosureSource(theta, Word(d.alphabet, ()), d)
    src.kind = "episturmian"
    return src


def theta_standard_with_seed_source(theta: Antimorphism, seed: Word,
                                    d: DirectiveSequence) -> ClosureSource:
    return ClosureSource(theta, seed, d)


def fibonacci_source() -> ClosureSource:
    ab = Alphabet(("a", "b"))
    return episturmian_source(DirectiveSequence.parse(ab, "", "ab"))


def tribonacci_source() -> ClosureSource:
    abc = Alphabet(("a", "b", "c"))
    return episturmian_source(DirectiveSequence.parse(abc, "", "abc"))


@dataclass(frozen=True)
class ArnouxRauzyReport:
    ok: bool
    valence: int
    checked_up_to: int
    first_failure: Optional[int]
    reason: Optional[str]

    def describe(self) -> dict:
        return {"ok": self.ok, "valence": self.valence,
                "checked_up_to": self.checked_up_to,
                "first_failure": self.first_failure, "reason": self.reason}


def arnoux_rauzy_check(prefix: Word, max_len: int, valence: int) -> ArnouxRauzyReport:
    """Desk-scale Arnoux-Rauzy test on a finite prefix.

    Convention adopted: for each length 1..max_len there is exactly one LS
    and one RS factor, each with full valence, and the factor set is closed
    under reversal.  (Definition choice is documented in the README.)
    """
    theta_rev = Antimorphism.reversal(prefix.alphabet)
    for n in range(1, max_len + 1):
        closed, _witness = closed_under_theta(theta_rev, prefix, n)
        if not closed:
            return ArnouxRauzyReport(False, valence, max_len, n,
                                     "factor set not closed under reversal")
        spec = special_factors(prefix, n)
        if len(spec.left_special) != 1 or len(spec.right_special) != 1:
            return ArnouxRauzyReport(
                False, valence, max_len, n,
                f"expected one LS and one RS factor, got "
                f"{len(spec.left_special)} LS / {len(spec.right_special)} RS")
        ls = next(iter(spec.left_special))
        rs = next(iter(spec.right_special))
        sym = prefix.symbols
        lefts = {sym[i - 1] for i in range(1, len(sym) - n + 1)
                 if sym[i:i + n] == ls.symbols}
        rights = {sym[i + n] for i in range(len(sym) - n)
                  if sym[i:i + n] == rs.symbols}
        if len(lefts) != valence or len(rights) != valence:
            return ArnouxRauzyReport(
                False, valence, max_len, n,
                f"special factor valence {len(lefts)}/{len(rights)} != {valence}")
    return ArnouxRauzyReport(True, valence, max_len, None, None)


# --- generator configs -------------------------------------------------------

def source_from_config(cfg: dict) -> WordSource:
    """JSON generator config.

    {"kind": "episturmian"|"theta_standard_seed"|"thue_morse"|"periodic",
     "directive": {"pre": "...", "period": "..."}, "seed": "...",
     "period": "...", "antimorphism": {...}}
    """
    from .core import antimorphism_from_config

    kind = cfg.get("kind")
    if kind == "periodic":
        return periodic_source(Word.parse(cfg["period"]))
    if kind == "thue_morse":
        return thue_morse_source()
    if kind == "episturmian":
        d = cfg.get("directive", {})
        period = Word.parse(d.get("period", ""))
        alphabet = period.alphabet
        return episturmian_source(DirectiveSequence(
            Word.from_text(alphabet, d.get("pre", "")), period))
    if kind == "theta_standard_seed":
        theta = antimorphism_from_config(cfg["antimorphism"])
        d = cfg.get("directive", {})
        directive = DirectiveSequence(
            Word.from_text(theta.alphabet, d.get("pre", "")),
            Word.from_text(theta.alphabet, d.get("period", "")))
        seed = Word.from_text(theta.alphabet, cfg.get("seed", ""))
        return theta_standard_with_seed_source(theta, seed, directive)
    raise InputError(f"unknown generator kind: {kind!r}")
