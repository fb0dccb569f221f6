"""Command-line front end.

Exit status: 0 success, 1 semantic failure (axiom, optimality or
correspondence), 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chain import fmt_value, run_chain
from .correspondence import bridge_f_from_pi, verify_correspondence
from .errors import BudgetExceeded, DomainError, EmptyContinuationError
from .instance import Instance, InstanceError, linkage_doc, load_instance, operator_doc
from .language import (
    MAX_MATERIALIZE,
    family_from_language,
    fmt_word,
    greedy_minimax,
    language_violation,
    language_from_family,
    nesting_W,
)
from .linkage import check_monotone
from .operators import MAX_SWEEP, check_isotone, check_k_isotone, generate_family
from .oracle import (
    brute_max_F_psi,
    brute_minimax_W,
    random_isotone_operator,
    random_monotone_linkage,
    random_nonisotone_operator,
)
from .sets import axiom_violation, close_under_union, fmt_set, rank, truncate

OK, FAIL, BAD_INPUT = 0, 1, 2


def _family_lines(fam) -> list[str]:
    return [fmt_set(X) for X in fam.sets]


def _check_line(name: str, violation: str | None) -> str:
    return f"{name}: pass" if violation is None else f"{name}: FAIL witness {violation}"


def cmd_verify(inst: Instance, what: str) -> tuple[int, list[str]]:
    lines = []
    if what == "family":
        fam = inst.feasible_family()
        for axiom in ("accessible", "union_closed", "exchange", "interval"):
            lines.append(_check_line(axiom, axiom_violation(fam, axiom)))
        good = fam.accessible and fam.union_closed
        lines.append(f"antimatroid: {'pass' if good else 'FAIL'}")
        return (OK if good else FAIL), lines
    if what == "operator":
        op = inst.need_operator()
        lines.append("zero: pass")
        if op.kind == "truncated":
            w = check_k_isotone(op, op.cutoff)
            lines.append(_check_line(f"k_isotone[cutoff={op.cutoff}]", w and w.describe()))
        else:
            scope = "all_subsets" if op.n <= MAX_SWEEP else "feasible_only"
            w = check_isotone(op, scope)
            lines.append(_check_line("isotone", w and w.describe()))
            fw = check_isotone(op, "feasible_only")
            lines.append(_check_line("isotone_on_family", fw and fw.describe()))
        return (OK if w is None else FAIL), lines
    if what == "linkage":
        pi = inst.need_linkage()
        w = check_monotone(pi, sampled=pi.n > 16)
        lines.append(_check_line("monotone", w and w.describe()))
        return (OK if w is None else FAIL), lines
    if what == "language":
        if inst.language is None:
            raise InstanceError("instance has no language")
        failed = False
        for axiom in ("prefix", "exchange"):
            w = language_violation(inst.language, axiom)
            failed = failed or w is not None
            lines.append(_check_line(axiom, w))
        return (FAIL if failed else OK), lines
    raise InstanceError(f"unknown verify target {what!r}")


def cmd_generate(inst: Instance) -> tuple[int, list[str]]:
    fam, _ = generate_family(inst.need_operator())
    return OK, _family_lines(fam)


def cmd_optimize(inst: Instance, exclude_empty=False, trace=False, oracle=False) -> tuple[int, list[str]]:
    op, pi = inst.need_operator(), inst.need_linkage()
    result = run_chain(op, pi)
    optimum, value = result.optimum, result.value
    lines = []
    if exclude_empty and optimum == 0:
        best, winners = brute_max_F_psi(op, pi, exclude_empty=True)
        optimum, value = winners.sets[0], best
        lines.append("note: chain optimum is {}; reporting best non-empty feasible set")
    lines.append(f"optimum {fmt_set(optimum)} value {fmt_value(value)}")
    if trace:
        lines.extend(result.trace.lines())
        lines.append(f"evaluations {result.trace.evaluations}")
    status = OK
    if oracle:
        best, winners = brute_max_F_psi(op, pi, exclude_empty=exclude_empty)
        match = best == value
        where = " ".join(fmt_set(X) for X in winners.sets)
        lines.append(f"oracle value {fmt_value(best)} at {where} {'MATCH' if match else 'MISMATCH'}")
        if not match:
            status = FAIL
    return status, lines


def cmd_truncate(inst: Instance, k: int) -> tuple[int, list[str]]:
    return OK, _family_lines(truncate(inst.feasible_family(), k))


def cmd_close(inst: Instance) -> tuple[int, list[str]]:
    return OK, _family_lines(close_under_union(inst.feasible_family()))


def cmd_lang(inst: Instance, sub: str, k: int | None = None) -> tuple[int, list[str]]:
    if sub == "words":
        fam = inst.feasible_family()
        if fam.ground.n > MAX_MATERIALIZE:
            raise InstanceError(f"word listing limited to n <= {MAX_MATERIALIZE}")
        lang = language_from_family(fam)
        return OK, [fmt_word(w) for w in lang.sorted_words()]
    if sub == "check":
        if inst.language is None:
            raise InstanceError("instance has no language")
        status, lines = cmd_verify(inst, "language")
        if status == OK:
            lines.append(f"family: {' '.join(_family_lines(family_from_language(inst.language)))}")
        return status, lines
    if sub == "minimax":
        op, pi = inst.need_operator(), inst.need_linkage()
        f = bridge_f_from_pi(pi)
        r = rank(generate_family(op)[0])
        if k is None:
            k = r
        if not 1 <= k <= r:
            return FAIL, [f"k={k} outside 1..rank ({r})"]
        word = greedy_minimax(op, f, k)
        w = nesting_W(f, word)
        best, _ = brute_minimax_W(op, f, k)
        verdict = "MATCH" if w == best else "MISMATCH"
        return (OK if w == best else FAIL), [f"{fmt_word(word)} W={fmt_value(w)} {verdict}"]
    raise InstanceError(f"unknown lang subcommand {sub!r}")


def cmd_correspond(inst: Instance, k: int = 0) -> tuple[int, list[str]]:
    report = verify_correspondence(inst.need_operator(), inst.need_linkage(), k)
    return (OK if report.holds else FAIL), report.lines()


def cmd_random(seed: int, n: int, levels: int, kind: str) -> tuple[int, list[str]]:
    if kind == "isotone":
        op = random_isotone_operator(seed, n)
        linkage = linkage_doc(random_monotone_linkage(seed, n, levels))
    else:
        op = random_nonisotone_operator(seed, n)
        linkage = {"kind": "failure"}
    doc = {"n": n, "operator": operator_doc(op), "linkage": linkage}
    return OK, [json.dumps(doc, sort_keys=True)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimatroid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check axioms of a family, operator, linkage or language")
    p.add_argument("path")
    p.add_argument("--what", choices=["family", "operator", "linkage", "language"], default="family")

    p = sub.add_parser("generate", help="list the family generated by the operator")
    p.add_argument("path")

    p = sub.add_parser("optimize", help="run the Chain Algorithm")
    p.add_argument("path")
    p.add_argument("--exclude-empty", action="store_true", help="never report the empty set as optimum")
    p.add_argument("--trace", action="store_true", help="print the chain")
    p.add_argument("--oracle", action="store_true", help="compare with the brute-force maximum")

    p = sub.add_parser("truncate", help="k-truncation of the family")
    p.add_argument("path")
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("close", help="closure of the family under union")
    p.add_argument("path")

    p = sub.add_parser("lang", help="antimatroid language tools")
    p.add_argument("path")
    p.add_argument("sub", choices=["words", "check", "minimax"])
    p.add_argument("-k", type=int, default=None)

    p = sub.add_parser("correspond", help="check the chain / minimax nesting correspondence")
    p.add_argument("path")
    p.add_argument("-k", type=int, default=0, help="word length (default: rank)")

    p = sub.add_parser("random", help="emit a random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--kind", choices=["isotone", "nonisotone"], default="isotone")
    return parser


def run(args) -> tuple[int, list[str]]:
    if args.command == "random":
        return cmd_random(args.seed, args.n, args.levels, args.kind)
    inst = load_instance(args.path)
    if args.command == "verify":
        return cmd_verify(inst, args.what)
    if args.command == "generate":
        return cmd_generate(inst)
    if args.command == "optimize":
        return cmd_optimize(inst, args.exclude_empty, args.trace, args.oracle)
    if args.command == "truncate":
        return cmd_truncate(inst, args.k)
    if args.command == "close":
        return cmd_close(inst)
    if args.command == "lang":
        return cmd_lang(inst, args.sub, args.k)
    return cmd_correspond(inst, args.k)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, lines = run(args)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except EmptyContinuationError as exc:
        print(f"error: {exc} (stuck at {fmt_set(exc.stuck)})", file=sys.stderr)
        return FAIL
    except (DomainError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    sys.stdout.write("".join(line + "\n" for line in lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
