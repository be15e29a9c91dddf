"""Command-line driver.

Exit codes: 0 computed (the verdict is in the output), 1 verification
failed, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .census import DEFAULT_BUDGET, Relation, RelationKind, census, find_gap
from .equivalence import (
    expanded_weak_witness,
    parikh_equivalent,
    strongly_m_equivalent,
    strongly_m_equivalent_by_orderings,
    transposition_chain,
    weakly_m_related,
)
from .errors import BudgetExceeded, ClosureBudgetExceeded, ParikhError
from .matrix import parikh_matrix_of
from .rewriting import me_steps, one_equiv_normal_form, rewrite_path, se_steps
from .subwords import count_subword
from .words import alphabet_string, format_word, parse_alphabet, parse_ordering, parse_word, support

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def emit(args, command, inputs, result, text, certificate=None):
    if args.json:
        doc = {"command": command, "inputs": inputs, "result": result}
        if certificate is not None:
            doc["certificate"] = certificate
        print(json.dumps(doc))
    else:
        print(text)


def cmd_matrix(args):
    w = parse_word(args.word)
    order = parse_ordering(args.order)
    m = parikh_matrix_of(w, order)
    emit(args, "matrix", {"word": w, "order": order}, m.as_lists(), m.render())
    return EXIT_OK


def cmd_count(args):
    w, u = parse_word(args.word), parse_word(args.pattern)
    n = count_subword(w, u)
    emit(args, "count", {"word": w, "pattern": u}, n, str(n))
    return EXIT_OK


def _need(value, what, relation):
    if value is None:
        raise UsageError(f"--{what} is required for relation {relation}")
    return value


def _equiv(args, w, w2):
    """Return (verdict, certificate dict, extra text lines)."""
    kind = RelationKind(args.relation)
    if kind is RelationKind.M:
        order = parse_ordering(_need(args.order, "order", kind.value))
        a, b = parikh_matrix_of(w, order), parikh_matrix_of(w2, order)
        cert = {"matrix": a.as_lists()} if a == b else {"matrix_w": a.as_lists(), "matrix_w2": b.as_lists()}
        return a == b, cert, []
    if kind is RelationKind.ONE:
        order = parse_ordering(_need(args.order, "order", kind.value))
        n1, n2 = one_equiv_normal_form(w, order), one_equiv_normal_form(w2, order)
        return n1 == n2, {"normal_form_w": n1, "normal_form_w2": n2}, [
            f"normal forms: {format_word(n1)} {format_word(n2)}"
        ]
    if kind in (RelationKind.ME, RelationKind.MSE):
        if kind is RelationKind.ME:
            order = parse_ordering(_need(args.order, "order", kind.value))
            steps = lambda u: me_steps(u, order)  # noqa: E731
        else:
            steps = se_steps
        path = None
        if parikh_equivalent(w, w2):
            path = rewrite_path(w, w2, steps, args.budget)
        if path is None:
            return False, None, []
        trace = [str(st) for st in path]
        return True, ({"trace": trace} if args.trace else None), (trace if args.trace else [])
    if kind is RelationKind.STRONG_M:
        if args.by_orderings:
            sigma = parse_alphabet(args.alphabet) if args.alphabet else support(w) | support(w2)
            return strongly_m_equivalent_by_orderings(w, w2, sigma), None, []
        verdict = strongly_m_equivalent(w, w2)
        if verdict.equivalent:
            return True, None, []
        v = verdict.separating_pattern
        c1, c2 = count_subword(w, v), count_subword(w2, v)
        return False, {"separating_pattern": v, "count_w": c1, "count_w2": c2}, [
            f"separating pattern: {v} ({c1} vs {c2})"
        ]
    if kind is RelationKind.WEAK:
        sigma = parse_alphabet(_need(args.alphabet, "alphabet", kind.value))
        witness = weakly_m_related(w, w2, sigma)
        if witness is None:
            return False, None, []
        return True, {"ordering": witness.ordering}, [f"witness ordering: {witness.ordering}"]
    if kind is RelationKind.PARIKH:
        return parikh_equivalent(w, w2), None, []
    raise UsageError(f"unknown relation {args.relation}")


def cmd_equiv(args):
    w, w2 = parse_word(args.w), parse_word(args.w2)
    verdict, cert, lines = _equiv(args, w, w2)
    if args.relation == RelationKind.WEAK.value:
        head = "related" if verdict else "not related"
    else:
        head = "equivalent" if verdict else "not equivalent"
    inputs = {"w": w, "w2": w2, "relation": args.relation}
    if args.order:
        inputs["order"] = args.order
    if args.alphabet:
        inputs["alphabet"] = args.alphabet
    emit(args, "equiv", inputs, {"verdict": verdict}, "\n".join([head, *lines]), cert)
    return EXIT_OK


def _relation(name, order, alphabet, sigma_token):
    kind = RelationKind(name)
    if kind.needs_order and order is None:
        # the alphabet string doubles as its ordering, "abc" meaning a<b<c
        order = sigma_token
    return Relation.parse(name, order, alphabet)


def cmd_census(args):
    sigma = parse_alphabet(args.alphabet)
    rel = _relation(args.relation, args.order, args.weak_alphabet, args.alphabet)
    report = census(sigma, args.max_len, rel, budget=args.budget, threads=args.threads)
    inputs = {"alphabet": alphabet_string(sigma), "max_len": args.max_len, "relation": str(rel)}
    emit(args, "census", inputs, report.as_dict(), report.render())
    return EXIT_OK


def cmd_find_gap(args):
    sigma = parse_alphabet(args.alphabet)
    coarse = _relation(args.coarse, args.order, args.weak_alphabet, args.alphabet)
    fine = _relation(args.fine, args.order, args.weak_alphabet, args.alphabet)
    gaps = find_gap(sigma, args.max_len, coarse, fine, budget=args.budget)
    inputs = {"alphabet": alphabet_string(sigma), "max_len": args.max_len, "coarse": str(coarse), "fine": str(fine)}
    text = "\n".join([f"{len(gaps)} pairs"] + [f"{format_word(g.w)} {format_word(g.w2)}" for g in gaps])
    emit(args, "find-gap", inputs, [g.as_dict() for g in gaps], text)
    return EXIT_OK


def cmd_verify(args):
    if args.theorem not in verify_mod.THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; known: {', '.join(verify_mod.THEOREMS)}")
    report = verify_mod.run(args.theorem, args.max_len, args.budget)
    emit(args, "verify", {"theorem": args.theorem, "max_len": args.max_len}, report.as_dict(), report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_chain(args):
    w, w2 = parse_word(args.w), parse_word(args.w2)
    sigma = parse_alphabet(args.alphabet)
    chain = transposition_chain(w, w2, sigma)
    inputs = {"w": w, "w2": w2, "alphabet": alphabet_string(sigma)}
    emit(args, "chain", inputs, chain, "\n".join(format_word(u) for u in chain))
    return EXIT_OK


def cmd_witness(args):
    w, w2 = parse_word(args.w), parse_word(args.w2)
    witness = expanded_weak_witness(w, w2)
    emit(args, "witness", {"w": w, "w2": w2}, {"ordering": witness.ordering}, witness.ordering)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flags appear before or after the subcommand
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="work/closure cap")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes for census")

    p = argparse.ArgumentParser(prog="parikh", description="Parikh matrices and word equivalences", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    relations = [k.value for k in RelationKind]

    s = sub.add_parser("matrix", parents=[common], help="print the Parikh matrix of a word")
    s.add_argument("word")
    s.add_argument("--order", required=True)
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("count", parents=[common], help="count scattered-subword occurrences")
    s.add_argument("word")
    s.add_argument("pattern")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("equiv", parents=[common], help="decide a relation between two words")
    s.add_argument("w")
    s.add_argument("w2")
    s.add_argument("--relation", required=True, choices=relations)
    s.add_argument("--order")
    s.add_argument("--alphabet")
    s.add_argument("--trace", action="store_true", help="print the rewrite trace (me, mse)")
    s.add_argument("--by-orderings", action="store_true", help="strong: try every ordering instead")
    s.set_defaults(func=cmd_equiv)

    for name, func, help_ in (
        ("census", cmd_census, "count equivalence classes of all short words"),
        ("find-gap", cmd_find_gap, "pairs related under a coarse relation but not a fine one"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--alphabet", required=True)
        s.add_argument("--max-len", type=int, required=True)
        s.add_argument("--order", help="ordering for m/me/one (default: the alphabet as written)")
        s.add_argument("--weak-alphabet", help="ambient alphabet for weak (default: --alphabet)")
        if name == "census":
            s.add_argument("--relation", required=True, choices=relations)
        else:
            s.add_argument("--coarse", required=True, choices=relations)
            s.add_argument("--fine", required=True, choices=relations)
        s.set_defaults(func=func)

    s = sub.add_parser("verify", parents=[common], help="exhaustively check a theorem")
    s.add_argument("--theorem", required=True, help=", ".join(verify_mod.THEOREMS))
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("chain", parents=[common], help="weakly M-related transposition chain")
    s.add_argument("w")
    s.add_argument("w2")
    s.add_argument("--alphabet", required=True)
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("witness", parents=[common], help="ordering over an expanded alphabet")
    s.add_argument("w")
    s.add_argument("w2")
    s.set_defaults(func=cmd_witness)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("budget", DEFAULT_BUDGET), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (BudgetExceeded, ClosureBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParikhError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
