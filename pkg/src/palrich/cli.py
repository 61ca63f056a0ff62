"""Command-line frontend: analyses, Rauzy graphs, decompositions, generators.

Reports are deterministic for identical inputs and seed: JSON is emitted with
sorted keys, tables and graphs use lexicographic ordering, and all randomized
sampling is driven by the --seed flag (default 0).
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from typing import Optional

from . import __version__
from .core import (
    Alphabet,
    Antimorphism,
    InputError,
    Word,
    antimorphism_from_file,
    word_from_file,
)
from .complexity import (
    check_inequality2,
    closed_under_theta,
    complexity_table,
    default_safe_length,
    is_rich_by_T,
)
from .decompose import (
    DecomposeError,
    richness_conditions_check,
    theorem1_decompose,
    theorem2_decompose,
    theorem3_pipeline,
    verify_eq4,
)
from .generators import (
    DirectiveSequence,
    WordSource,
    episturmian_source,
    fibonacci_source,
    periodic_source,
    theta_standard_with_seed_source,
    thue_morse_source,
    tribonacci_source,
)
from .palindromes import defect_profile
from .rauzy import build_graph, check_proposition1
from .returns import crw_palindromicity_scan, unioccurrent_lps_scan

SCHEMA_VERSION = 1


def _parse_theta(spec: str, alphabet: Optional[Alphabet]) -> Antimorphism:
    """--theta reversal | pairs:a-b,c-c | <config.json>."""
    if spec == "reversal":
        if alphabet is None:
            raise InputError("reversal antimorphism needs a word to infer the alphabet")
        return Antimorphism.reversal(alphabet)
    if spec.startswith("pairs:"):
        pairs = []
        letters = []
        for part in spec[len("pairs:"):].split(","):
            if "-" not in part:
                raise InputError(f"bad pair {part!r}; expected like a-b or c-c")
            x, y = part.split("-", 1)
            pairs.append((x, y))
            for t in (x, y):
                if t not in letters:
                    letters.append(t)
        ab = alphabet if alphabet is not None else Alphabet(tuple(letters))
        return Antimorphism.from_pairs(ab, pairs)
    return antimorphism_from_file(spec)


_DIRECTIVE_RE = re.compile(r"^([^()]*)\(([^()]+)\)$")


def _parse_directive(spec: str, alphabet: Alphabet) -> DirectiveSequence:
    """Directive syntax: "pre(period)", "(period)" or just "period"."""
    m = _DIRECTIVE_RE.match(spec)
    pre, period = (m.group(1), m.group(2)) if m else ("", spec)
    if not period:
        raise InputError("directive period must be non-empty")
    return DirectiveSequence(Word.from_text(alphabet, pre),
                             Word.from_text(alphabet, period))


def _load_input(args) -> tuple[Word, Antimorphism, dict]:
    """Resolve --gen/--word-file plus --theta into (prefix, theta, descriptor)."""
    n = args.len
    if args.word_file:
        w = word_from_file(args.word_file, tokens=args.tokens)
        if len(w) > n:
            w = w.factor(0, n)
        theta = _parse_theta(args.theta, w.alphabet)
        return w, theta, {"word_file": args.word_file, "length": len(w)}
    if not args.gen:
        raise InputError("either --gen or --word-file is required")
    gen = args.gen
    src: WordSource
    if gen == "fibonacci":
        src = fibonacci_source()
    elif gen == "tribonacci":
        src = tribonacci_source()
    elif gen == "thue_morse":
        src = thue_morse_source()
    elif gen.startswith("periodic:"):
        src = periodic_source(Word.parse(gen[len("periodic:"):]))
    elif gen == "episturmian":
        if not args.directive:
            raise InputError("--gen episturmian needs --directive")
        ab = Alphabet(tuple(sorted(set(args.directive) - set("()"))))
        src = episturmian_source(_parse_directive(args.directive, ab))
    elif gen == "theta_standard":
        theta = _parse_theta(args.theta, None)
        if not args.directive:
            raise InputError("--gen theta_standard needs --directive")
        d = _parse_directive(args.directive, theta.alphabet)
        seed_w = Word.from_text(theta.alphabet, args.seed_word or "")
        src = theta_standard_with_seed_source(theta, seed_w, d)
        w = src.prefix(n)
        return w, theta, src.describe()
    else:
        raise InputError(f"unknown generator: {gen!r}")
    w = src.prefix(n)
    theta = _parse_theta(args.theta, w.alphabet)
    return w, theta, src.describe()


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    w, theta, descriptor = _load_input(args)
    safe = default_safe_length(len(w), args.safe_divisor)
    profile = defect_profile(theta, w)
    last_inc = None
    for k in range(1, len(profile.values)):
        if profile.values[k] > profile.values[k - 1]:
            last_inc = k
    table = complexity_table(theta, w, min(safe + 1, len(w) - 1),
                             safe_length=safe, source=str(descriptor))
    closed, witness = closed_under_theta(theta, w, min(safe, len(w)))
    ineq = check_inequality2(table, closed)
    rauzy_checks = {}
    for n in range(1, min(safe, args.max_rauzy_n) + 1):
        g = build_graph(theta, w, n)
        res = check_proposition1(g, theta)
        rauzy_checks[str(n)] = {
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "loops_palindromic": res.loops_palindromic,
            "tree_after_loop_removal": res.tree_after_loop_removal,
            "T": table.t(n) if n <= table.max_length else None,
        }
    crw = crw_palindromicity_scan(theta, w)
    lps_scan = unioccurrent_lps_scan(theta, w)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "seed": args.seed,
        "input": descriptor,
        "antimorphism": theta.describe(),
        "prefix_length": len(w),
        "safe_length": safe,
        "defect": {
            "of_prefix": profile.final(),   # defect of the analyzed prefix,
                                            # not of the infinite word
            "last_increment_index": last_inc,
            "gamma": profile.gammas[-1],
            "pal_count": profile.pal_counts[-1],
        },
        "complexity": table.describe(),
        "closure": {"closed": closed,
                    "witness": witness.text if witness else None,
                    "checked_up_to": min(safe, len(w))},
        "rich_by_T": is_rich_by_T(table, closed) if closed else None,
        "inequality2": ineq,
        "rauzy": rauzy_checks,
        "returns": {
            "crw_scan": crw.describe(),
            "unioccurrent_lps_last_violation": lps_scan,
        },
    }
    if args.profile_csv:
        with open(args.profile_csv, "w", encoding="utf-8") as fh:
            fh.write(profile.to_csv())
    if args.table_csv:
        with open(args.table_csv, "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
    _emit(args, report)
    return 0


def cmd_rauzy(args) -> int:
    w, theta, descriptor = _load_input(args)
    safe = default_safe_length(len(w), args.safe_divisor)
    if args.n > safe:
        raise InputError(
            f"n={args.n} exceeds safe length {safe} for a prefix of {len(w)} "
            "letters; increase --len")
    g = build_graph(theta, w, args.n)
    res = check_proposition1(g, theta)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot())
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "input": descriptor,
        "antimorphism": theta.describe(),
        "n": args.n,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "loops": len(g.loop_edges),
        "loops_palindromic": res.loops_palindromic,
        "tree_after_loop_removal": res.tree_after_loop_removal,
    }
    _emit(args, report)
    return 0


def _eq4_samples(coding, theta, rng, count: int = 100) -> dict:
    b = coding.return_alphabet
    failures = 0
    for _ in range(count):
        length = rng.randint(0, 6)
        w = Word(b, tuple(rng.randrange(len(b)) for _ in range(length)))
        if not verify_eq4(theta, coding.phi, coding.p, w):
            failures += 1
    return {"samples": count, "failures": failures}


def cmd_decompose(args) -> int:
    rng = random.Random(args.seed)
    if args.method == "theorem3":
        theta = _parse_theta(args.theta, None)
        if not args.directive:
            raise InputError("--method theorem3 needs --directive")
        d = _parse_directive(args.directive, theta.alphabet)
        seed_w = Word.from_text(theta.alphabet, args.seed_word or "")
        try:
            report = theorem3_pipeline(theta, seed_w, d, scale=args.len)
        except DecomposeError as exc:
            _emit(args, {"error": str(exc), "payload": exc.payload,
                         "schema_version": SCHEMA_VERSION})
            return 2
        report["schema_version"] = SCHEMA_VERSION
        report["tool_version"] = __version__
        report["seed"] = args.seed
        _emit(args, report)
        return 0 if report["ok"] else 2

    w, theta, descriptor = _load_input(args)
    try:
        if args.method == "path":
            n = args.n or 1
            coding = theorem1_decompose(theta, w, n)
            rich = richness_conditions_check(coding.theta2, coding.v_prefix,
                                             max_factor_len=args.max_factor_len)
            ok = rich.both
            report = {
                "schema_version": SCHEMA_VERSION,
                "tool_version": __version__,
                "seed": args.seed,
                "input": descriptor,
                "antimorphism": theta.describe(),
                "method": "path",
                "coding": coding.describe(),
                "richness_conditions": rich.describe(),
                "ok": ok,
            }
        elif args.method == "return":
            from .palindromes import defect as _defect

            coding = theorem2_decompose(theta, w)
            eq4 = _eq4_samples(coding, theta, rng)
            v_defect = _defect(Antimorphism.reversal(coding.v_prefix.alphabet),
                               coding.v_prefix)
            ok = coding.eq3_ok and eq4["failures"] == 0 and v_defect == 0
            report = {
                "schema_version": SCHEMA_VERSION,
                "tool_version": __version__,
                "seed": args.seed,
                "input": descriptor,
                "antimorphism": theta.describe(),
                "method": "return",
                "coding": coding.describe(),
                "eq4": eq4,
                "derived_defect": v_defect,
                "ok": ok,
            }
        else:
            raise InputError(f"unknown method {args.method!r}")
    except DecomposeError as exc:
        _emit(args, {"error": str(exc), "payload": exc.payload,
                     "schema_version": SCHEMA_VERSION})
        return 2
    _emit(args, report)
    return 0 if ok else 2


def cmd_generate(args) -> int:
    w, _theta, descriptor = _load_input(args)
    text = w.text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_common(sp) -> None:
    sp.add_argument("--gen", help="generator: fibonacci | tribonacci | thue_morse"
                                  " | periodic:<word> | episturmian | theta_standard")
    sp.add_argument("--word-file", help="read the word from a file instead")
    sp.add_argument("--tokens", action="store_true",
                    help="word file is whitespace-tokenized")
    sp.add_argument("--theta", default="reversal",
                    help="reversal | pairs:a-b,c-c | antimorphism config JSON")
    sp.add_argument("--directive", help='closure directive, e.g. "(ab)" or "a(bc)"')
    sp.add_argument("--seed-word", default="", help="seed for theta_standard")
    sp.add_argument("--len", type=int, default=2000, help="prefix length to analyze")
    sp.add_argument("--seed", type=int, default=0, help="RNG seed for sampling")
    sp.add_argument("--safe-divisor", type=int, default=64,
                    help="safe_length = prefix_length / divisor")
    sp.add_argument("--out", help="write the JSON report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="palrich",
        description="Analysis of words with respect to an involutive "
                    "antimorphism: palindromic defect, complexity gaps, Rauzy "
                    "graphs, return words and richness decompositions.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis report")
    _add_common(a)
    a.add_argument("--max-rauzy-n", type=int, default=12)
    a.add_argument("--profile-csv", help="write the defect profile CSV here")
    a.add_argument("--table-csv", help="write the complexity table CSV here")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("rauzy", help="super reduced Rauzy graph at one length")
    _add_common(r)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--dot", help="write the DOT graph here")
    r.set_defaults(func=cmd_rauzy)

    d = sub.add_parser("decompose", help="recode as a morphic image of a rich word")
    _add_common(d)
    d.add_argument("--method", choices=["path", "return", "theorem3"],
                   required=True)
    d.add_argument("--n", type=int, help="coding length for --method path")
    d.add_argument("--max-factor-len", type=int, default=None)
    d.set_defaults(func=cmd_decompose)

    g = sub.add_parser("generate", help="dump a generated prefix")
    _add_common(g)
    g.set_defaults(func=cmd_generate)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
