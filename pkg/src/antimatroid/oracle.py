"""Brute-force reference implementations and random instance generators.

Nothing here reuses the generation, optimization or closure code it is used
to check: subsets are enumerated with plain frozensets, minima and maxima are
taken directly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .errors import BudgetExceeded, DomainError, EmptyContinuationError
from .linkage import LinkageSpec
from .operators import OperatorSpec, evaluate, operator_from_family, table_operator
from .sets import SetFamily


@dataclass(frozen=True)
class OracleBudget:
    max_ground: int = 20
    max_words: int = 10**6


DEFAULT_BUDGET = OracleBudget()


def _fs(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _mask(s) -> int:
    return sum(1 << (x - 1) for x in s)


def _check_ground(n: int, budget: OracleBudget):
    if n > budget.max_ground:
        raise BudgetExceeded(f"n={n} exceeds oracle budget {budget.max_ground}")


def enumerate_feasible(op: OperatorSpec, budget: OracleBudget = DEFAULT_BUDGET) -> SetFamily:
    """Every set reachable from the empty set by Psi-steps, found depth-first."""
    _check_ground(op.n, budget)
    seen = {frozenset()}
    stack = [frozenset()]
    while stack:
        S = stack.pop()
        for x in _fs(evaluate(op, _mask(S))):
            T = S | {x}
            if T not in seen:
                seen.add(T)
                stack.append(T)
    return SetFamily(op.ground, tuple(_mask(S) for S in seen))


def _proper_feasible(fam: SetFamily) -> list[frozenset[int]]:
    sets = [_fs(X) for X in fam.sets]
    return [S for S in sets if any(S < T for T in sets)]


def brute_max_F_psi(
    op: OperatorSpec,
    pi: LinkageSpec,
    budget: OracleBudget = DEFAULT_BUDGET,
    exclude_empty: bool = False,
) -> tuple[float, SetFamily]:
    """Maximum of F_Psi over the generated family minus its maximal sets, with all maximizers.

    ``exclude_empty`` also drops the empty set from the candidates.
    """
    fam = enumerate_feasible(op, budget)
    best = None
    winners: list[frozenset[int]] = []
    for S in _proper_feasible(fam):
        if exclude_empty and not S:
            continue
        cands = _fs(evaluate(op, _mask(S)))
        if not cands:
            raise EmptyContinuationError(
                "Psi({" + ",".join(map(str, sorted(S))) + "}) is empty on a non-maximal feasible set",
                _mask(S),
            )
        value = min(pi(x, _mask(S)) for x in cands)
        if best is None or value > best:
            best, winners = value, [S]
        elif value == best:
            winners.append(S)
    if best is None:
        raise DomainError("no non-maximal feasible set to optimize over")
    return best, SetFamily(op.ground, tuple(_mask(S) for S in winners))


def feasible_words(op: OperatorSpec, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Length-k words whose every prefix support is generated by ``op``."""
    fam = {_fs(X) for X in enumerate_feasible(op, budget).sets}
    letters = range(1, op.n + 1)
    count = 0

    def grow(word, support):
        nonlocal count
        if len(word) == k:
            count += 1
            if count > budget.max_words:
                raise BudgetExceeded(f"more than {budget.max_words} words")
            yield tuple(word)
            return
        for x in letters:
            if x not in support and support | {x} in fam:
                word.append(x)
                yield from grow(word, support | {x})
                word.pop()

    yield from grow([], frozenset())


def brute_minimax_W(
    op: OperatorSpec, f: Callable[[int, int], float], k: int, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[float, set[tuple[int, ...]]]:
    """Minimum of W over all length-k words of L(F(Psi)) and all minimizing words."""
    if k < 1:
        raise DomainError("W is undefined on the empty word; k must be >= 1")
    best = None
    words: set[tuple[int, ...]] = set()
    for word in feasible_words(op, k, budget):
        prefix = 0
        w = None
        for x in word:
            prefix |= 1 << (x - 1)
            v = f(x, prefix)
            w = v if w is None else max(w, v)
        if best is None or w < best:
            best, words = w, {word}
        elif w == best:
            words.add(word)
    if best is None:
        raise DomainError(f"k={k} exceeds the rank of the generated family")
    return best, words


# -- families -------------------------------------------------------------------

def accessible_families(n: int) -> Iterator[SetFamily]:
    """Every accessible family on {1..n} (exhaustive; practical for n <= 4)."""
    by_size = [[frozenset(c) for c in combinations(range(1, n + 1), i)] for i in range(n + 1)]

    def extend(i, chosen, current):
        if i > n or not current:
            yield chosen
            return
        cands = [S for S in by_size[i] if any(S - {x} in current for x in S)]
        for r in range(len(cands) + 1):
            for pick in combinations(cands, r):
                yield from extend(i + 1, chosen + list(pick), set(pick))

    for sets in extend(1, [frozenset()], {frozenset()}):
        yield SetFamily(n, tuple(_mask(S) for S in sets))


def random_accessible_family(seed: int, n: int, p: float = 0.5) -> SetFamily:
    """Level-by-level random accessible family: each set with a present parent kept with prob p."""
    rng = random.Random(seed)
    current = {frozenset()}
    chosen = [frozenset()]
    for i in range(1, n + 1):
        nxt = set()
        for c in combinations(range(1, n + 1), i):
            S = frozenset(c)
            if any(S - {x} in current for x in S) and rng.random() < p:
                nxt.add(S)
        if not nxt:
            break
        chosen.extend(nxt)
        current = nxt
    return SetFamily(n, tuple(_mask(S) for S in chosen))


def _union_close(sets: set[frozenset[int]]) -> set[frozenset[int]]:
    closed = set(sets)
    while True:
        new = {a | b for a in closed for b in closed} - closed
        if not new:
            return closed
        closed |= new


def random_antimatroid(seed: int, n: int) -> SetFamily:
    """Union closure of the prefix sets of a few random words.

    Prefix sets form an accessible family, and the union closure of an
    accessible family is accessible, so the result is an antimatroid. This is a
    sampler with no uniformity claim.
    """
    rng = random.Random(seed)
    sets = {frozenset()}
    for _ in range(rng.randint(1, n + 1)):
        word = rng.sample(range(1, n + 1), n)
        length = n if rng.random() < 0.6 else rng.randint(1, n)
        for j in range(1, length + 1):
            sets.add(frozenset(word[:j]))
    return SetFamily(n, tuple(_mask(S) for S in _union_close(sets)))


# -- operators and linkages --------------------------------------------------------

def random_isotone_operator(seed: int, n: int) -> OperatorSpec:
    """Basis operator of a random antimatroid, materialized as a full table."""
    if n > 8:
        raise DomainError("random_isotone_operator supports n <= 8")
    fam = random_antimatroid(seed, n)
    basis_op = operator_from_family(fam)
    entries = []
    for X in range(1 << n):
        v = evaluate(basis_op, X)
        if v:
            entries.append((X, v))
    return table_operator(n, entries)


def random_nonisotone_operator(seed: int, n: int, max_tries: int = 1000) -> OperatorSpec:
    """Table operator with Psi(X) non-empty on every proper subset and an isotone
    violation between two generated sets."""
    from .operators import check_isotone

    # on two elements every operator that never stalls is isotone on its family
    if n < 3:
        raise DomainError("a non-isotone operator needs n >= 3")
    rng = random.Random(seed)
    full = (1 << n) - 1
    for _ in range(max_tries):
        entries = []
        for X in range(full):
            outside = [x for x in range(1, n + 1) if not X >> (x - 1) & 1]
            k = rng.randint(1, min(2, len(outside)))
            entries.append((X, _mask(rng.sample(outside, k))))
        op = table_operator(n, entries)
        if check_isotone(op, "feasible_only") is not None:
            return op
    raise RuntimeError("failed to draw a non-isotone operator")


def random_monotone_linkage(seed: int, n: int, levels: int = 3) -> LinkageSpec:
    """Random table linkage, non-increasing along inclusion for every x.

    Per element x: an antitone step function g_x of |X| taking ``levels``
    values, minus a perturbation max_{y in X} r_xy that only grows with X.
    """
    if levels < 1:
        raise DomainError("levels must be >= 1")
    from .linkage import table_linkage

    rng = random.Random(seed)
    entries = []
    for x in range(1, n + 1):
        values = sorted(rng.sample(range(10 * levels), levels), reverse=True)
        idx = sorted(rng.randrange(levels) for _ in range(n))
        step = [values[i] for i in idx]
        bump = [0.0] * (n + 1)
        if levels > 1:
            bump = [rng.choice((0.0, 0.5, 1.0)) for _ in range(n + 1)]
        for X in range(1 << n):
            if X >> (x - 1) & 1:
                continue
            members = _fs(X)
            drop = max((bump[y] for y in members), default=0.0)
            entries.append((x, X, step[len(members)] - drop))
    return table_linkage(n, entries)
