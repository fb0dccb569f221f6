"""The Chain Algorithm: greedy maximization of F_Psi over a generated family."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, EmptyContinuationError
from .linkage import LinkageSpec, linkage_value
from .operators import OperatorSpec, evaluate, generate_family
from .sets import elements, fmt_set, maximal_members, size


@dataclass(frozen=True)
class ChainStep:
    set: int
    value: float
    chosen: int


@dataclass(frozen=True)
class ChainTrace:
    steps: tuple[ChainStep, ...]
    terminal: int
    evaluations: int

    @property
    def word(self) -> tuple[int, ...]:
        """The added elements x_1 .. x_k in order."""
        return tuple(s.chosen for s in self.steps)

    def lines(self) -> list[str]:
        out = [f"X={fmt_set(s.set)} F={fmt_value(s.value)} x={s.chosen}" for s in self.steps]
        out.append(f"X={fmt_set(self.terminal)} end")
        return out


@dataclass(frozen=True)
class OptResult:
    optimum: int
    value: float
    trace: ChainTrace


def fmt_value(v: float) -> str:
    """Shortest round-trip rendering; integral values print without a fraction."""
    v = float(v)
    if v.is_integer() and abs(v) < 2**53:
        return str(int(v))
    return repr(v)


def _terminal_ok(op: OperatorSpec, X: int) -> bool:
    """Whether the chain may legitimately stop at X (Psi(X) empty)."""
    kind = op.kind
    if kind in ("full", "max_order", "chain", "poset_min"):
        return X == op.ground.full
    if kind == "basis_of_family":
        top = 0
        for S in op.family.sets:
            top |= S
        return X == top
    if kind == "truncated" and size(X) > op.cutoff:
        return True
    if kind == "truncated" and op.inner.kind != "table":
        return _terminal_ok(op.inner, X)
    fam, _ = generate_family(op)
    return X in maximal_members(fam)


def run_chain(op: OperatorSpec, pi: LinkageSpec) -> OptResult:
    """Build X_0 = {} < X_1 < ... by adding a pi-minimal continuation each step.

    Returns the earliest chain set with the largest F_Psi value. Ties among
    continuations go to the smallest element.
    """
    if op.ground.n != pi.ground.n:
        raise DomainError("operator and linkage live on different ground sets")
    X = 0
    cands = evaluate(op, X)
    if not cands:
        raise EmptyContinuationError("Psi({}) is empty; F_Psi({}) undefined", 0)
    steps = []
    evaluations = 0
    best_set, best_value = 0, None
    while cands:
        value, chosen = None, 0
        rest = cands
        while rest:
            low = rest & -rest
            x = low.bit_length()
            v = linkage_value(pi, x, X)
            evaluations += 1
            if value is None or v < value:
                value, chosen = v, x
            rest ^= low
        steps.append(ChainStep(X, value, chosen))
        if best_value is None or value > best_value:
            best_set, best_value = X, value
        X |= 1 << (chosen - 1)
        cands = evaluate(op, X)
    if not _terminal_ok(op, X):
        raise EmptyContinuationError(
            f"Psi({fmt_set(X)}) is empty before the maximal feasible set was reached", X
        )
    n = op.ground.n
    if evaluations > n * (n + 1):
        raise AssertionError(f"{evaluations} linkage evaluations exceed n(n+1) = {n * (n + 1)}")
    trace = ChainTrace(tuple(steps), X, evaluations)
    return OptResult(best_set, best_value, trace)


def chain_dominance_holds(op: OperatorSpec, pi: LinkageSpec, result: OptResult, X: int) -> bool:
    """The per-set bound used in the optimality argument.

    For a feasible X not containing the whole chain, with j the least index
    where X_j is not inside X: F_Psi(X) <= pi(x_j, X) <= pi(x_j, X_{j-1}) = F_Psi(X_{j-1}).
    """
    steps = result.trace.steps
    for step in steps:
        xj = step.chosen
        if (step.set | 1 << (xj - 1)) & ~X:
            cands = evaluate(op, X)
            if not cands & (1 << (xj - 1)):
                return False
            f_x = min(linkage_value(pi, x, X) for x in elements(cands))
            via = linkage_value(pi, xj, X)
            return f_x <= via <= step.value
    return True


def verify_against_oracle(op: OperatorSpec, pi: LinkageSpec, r: OptResult) -> bool:
    """Whether ``r.value`` equals the brute-force maximum of F_Psi."""
    from .oracle import brute_max_F_psi

    value, _ = brute_max_F_psi(op, pi)
    return r.value == value
