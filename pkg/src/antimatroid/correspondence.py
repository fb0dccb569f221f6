"""Bridge between Chain Algorithm runs and minimax nesting solutions.

With f(x, A) = pi(x, A - x), the nesting value of a prefix x_1 .. x_{i+1} is
pi(x_{i+1}, {x_1 .. x_i}), so the greedy minimax word and the chain coincide,
and the shortest prefix attaining W(alpha) is the Chain Algorithm's optimum.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .chain import fmt_value, run_chain
from .errors import DomainError
from .language import Word, fmt_word, greedy_minimax, nesting_W, prefix_values
from .linkage import LinkageSpec, check_monotone, linkage_value, objective_F_psi
from .operators import OperatorSpec, check_isotone, check_k_isotone, generate_family, truncated_operator
from .oracle import brute_max_F_psi, brute_minimax_W
from .sets import bit, fmt_set, rank


@dataclass(frozen=True)
class BridgedNesting:
    source: LinkageSpec

    def __call__(self, x: int, A: int) -> float:
        if not A & bit(x):
            raise DomainError(f"f({x}, {fmt_set(A)}) undefined: x must lie in A")
        return linkage_value(self.source, x, A & ~bit(x))


@dataclass(frozen=True)
class CorrespondenceReport:
    word: Word
    p: int
    prefix_set: int
    chain_value: float
    nesting_value: float
    holds: bool
    greedy_word: Word = ()
    k: int = 0
    failures: tuple[str, ...] = field(default=())

    def lines(self) -> list[str]:
        out = [
            f"word {fmt_word(self.word)}",
            f"k {self.k}",
            f"p {self.p}",
            f"prefix {fmt_set(self.prefix_set)}",
            f"chain_value {fmt_value(self.chain_value)}",
            f"nesting_value {fmt_value(self.nesting_value)}",
        ]
        out.extend(f"violated: {msg}" for msg in self.failures)
        out.append("HOLDS" if self.holds else "VIOLATED")
        return out


def bridge_f_from_pi(pi: LinkageSpec) -> BridgedNesting:
    """f(x, A) = pi(x, A - x); requires a monotone linkage."""
    w = check_monotone(pi, sampled=pi.n > 16)
    if w is not None:
        raise DomainError(f"linkage not monotone ({w.describe()})")
    return BridgedNesting(pi)


def shortest_critical_prefix(f, alpha: Word) -> tuple[int, int]:
    """Smallest p with W(x_1 .. x_{p+1}) = W(alpha), and the support of x_1 .. x_p."""
    values = prefix_values(f, alpha)
    if not values:
        raise DomainError("empty word has no critical prefix")
    top = max(values)
    p = values.index(top)
    S = 0
    for x in alpha[:p]:
        S |= bit(x)
    return p, S


def _require(op: OperatorSpec, pi: LinkageSpec):
    if op.n != pi.n:
        raise DomainError("operator and linkage live on different ground sets")
    w = check_monotone(pi, sampled=pi.n > 16)
    if w is not None:
        raise DomainError(f"linkage not monotone ({w.describe()})")
    if op.kind == "truncated":
        iw = check_k_isotone(op, op.cutoff)
    else:
        iw = check_isotone(op, "feasible_only")
    if iw is not None:
        raise DomainError(f"operator not isotone ({iw.describe()})")


def verify_correspondence(op: OperatorSpec, pi: LinkageSpec, k: int = 0) -> CorrespondenceReport:
    """Run both algorithms and check both directions of the correspondence.

    ``k = 0`` means the rank of the generated family. A ``k`` below the rank
    works on the (k-1)-truncated operator, whose family is the k-truncation.
    """
    _require(op, pi)
    fam, _ = generate_family(op)
    r = rank(fam)
    if k == 0:
        k = r
    if k < 1 or k > r:
        raise DomainError(f"k={k} outside 1..rank ({r})")
    work = truncated_operator(op, k - 1) if k < r else op
    f = bridge_f_from_pi(pi)
    failures = []

    result = run_chain(work, pi)
    alpha = result.trace.word
    if len(alpha) != k:
        failures.append(f"chain word has length {len(alpha)}, expected {k}")

    # (i) the chain word satisfies property (last) and its critical prefix is X0
    for i in range(1, len(alpha) + 1):
        best, _ = brute_minimax_W(work, f, i)
        if nesting_W(f, alpha[:i]) != best:
            failures.append(f"(last) fails at prefix length {i}")
            break
    p, prefix = shortest_critical_prefix(f, alpha)
    w_alpha = nesting_W(f, alpha)
    if prefix != result.optimum:
        failures.append(f"critical prefix {fmt_set(prefix)} differs from chain optimum {fmt_set(result.optimum)}")
    if w_alpha != result.value:
        failures.append(f"W(alpha)={fmt_value(w_alpha)} differs from F_Psi(X0)={fmt_value(result.value)}")

    # (ii) the greedy word's critical prefix maximizes F_Psi
    beta = greedy_minimax(work, f, k)
    if beta != alpha:
        failures.append(f"greedy word {fmt_word(beta)} differs from chain word {fmt_word(alpha)}")
    best_w, _ = brute_minimax_W(work, f, k)
    w_beta = nesting_W(f, beta)
    if w_beta != best_w:
        failures.append(f"greedy W={fmt_value(w_beta)} is not the minimax value {fmt_value(best_w)}")
    _, greedy_prefix = shortest_critical_prefix(f, beta)
    opt, _ = brute_max_F_psi(work, pi)
    if objective_F_psi(pi, work, greedy_prefix).value != opt:
        failures.append(f"greedy critical prefix {fmt_set(greedy_prefix)} does not maximize F_Psi")

    return CorrespondenceReport(
        word=alpha,
        p=p,
        prefix_set=prefix,
        chain_value=result.value,
        nesting_value=w_beta,
        holds=not failures,
        greedy_word=beta,
        k=k,
        failures=tuple(failures),
    )
