"""Operators Psi: 2^E -> 2^E with Psi(X) disjoint from X.

Builtin kinds:

``table``
    explicit X -> Psi(X) entries; missing entries evaluate to the empty set
``full``
    Psi(X) = E - X, generating 2^E
``max_order``
    Psi(X) = elements above max(X), Psi(empty) = E; generates 2^E but is not isotone
``poset_min``
    the minimal elements of E - X under a poset; generates the order ideals
``chain``
    Psi(X) = {max(X) + 1}, Psi(empty) = {1}; generates a single chain
``basis_of_family``
    Psi(X) = Gamma(B_X) for an antimatroid, the isotone generator of that family
``truncated``
    the wrapped operator on sets of size <= cutoff, empty above
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from . import kernels
from .errors import DomainError, NotAntimatroidError
from .sets import (
    GroundSet,
    Poset,
    SetFamily,
    _basis,
    _ground,
    as_mask,
    canonical_key,
    canonical_order,
    elements,
    fmt_set,
    is_antimatroid,
    size,
)

KINDS = ("table", "full", "max_order", "poset_min", "chain", "basis_of_family", "truncated")

# exhaustive all-subset sweeps are limited to this many ground elements
MAX_SWEEP = 16


@dataclass(frozen=True)
class OperatorSpec:
    ground: GroundSet
    kind: str
    table: tuple[tuple[int, int], ...] = ()
    poset: Poset | None = None
    family: SetFamily | None = None
    inner: OperatorSpec | None = None
    cutoff: int | None = None
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "ground", _ground(self.ground))
        if self.kind not in KINDS:
            raise DomainError(f"unknown operator kind {self.kind!r}")
        lookup = {}
        if self.kind == "table":
            full = self.ground.full
            for X, value in self.table:
                if X in lookup:
                    raise DomainError(f"duplicate table entry for {fmt_set(X)}")
                if (X | value) & ~full:
                    raise DomainError(f"table entry {fmt_set(X)} leaves the ground set")
                if X & value:
                    raise DomainError(
                        f"Psi({fmt_set(X)}) = {fmt_set(value)} meets X; operators must map into E - X"
                    )
                lookup[X] = value
            object.__setattr__(
                self, "table", tuple(sorted(lookup.items(), key=lambda kv: canonical_key(kv[0])))
            )
        elif self.kind == "poset_min" and self.poset is None:
            raise DomainError("poset_min needs a poset")
        elif self.kind == "basis_of_family" and self.family is None:
            raise DomainError("basis_of_family needs a family")
        elif self.kind == "truncated" and (self.inner is None or self.cutoff is None or self.cutoff < 0):
            raise DomainError("truncated needs an inner operator and a non-negative cutoff")
        object.__setattr__(self, "_lookup", lookup)

    @property
    def n(self) -> int:
        return self.ground.n

    def __call__(self, X) -> int:
        return evaluate(self, X)


class IsotoneWitness(NamedTuple):
    """A violation of Psi(A) & (E - B) <= Psi(B) for A <= B.

    With ``cutoff`` set, the witness instead records a set A = B of size >= k
    whose value Psi(A) contains ``a`` (breaking the emptiness clause of
    (k-1)-isotonicity).
    """

    A: int
    B: int
    a: int
    cutoff: bool = False

    def describe(self) -> str:
        if self.cutoff:
            return f"cutoff X={fmt_set(self.A)} a={self.a}"
        return f"A={fmt_set(self.A)} B={fmt_set(self.B)} a={self.a}"


@dataclass(frozen=True)
class GenerationTrace:
    """Parent pointers recorded by the Psi-Algorithm.

    ``parents[Y] = (X, x)`` means Y was first produced as X + x with x in Psi(X).
    ``levels[i]`` lists the sets of size i in generation order.
    """

    parents: Mapping[int, tuple[int, int]]
    levels: tuple[tuple[int, ...], ...]

    def chain(self, X) -> list[tuple[int, int]]:
        """The recorded chain (X_1, x_1), ..., (X_k, x_k) from the empty set up to X."""
        X = as_mask(X)
        if X not in self.parents and X != 0:
            raise DomainError(f"{fmt_set(X)} was not generated")
        steps = []
        while X:
            parent, x = self.parents[X]
            steps.append((X, x))
            X = parent
        steps.reverse()
        return steps


# -- constructors -------------------------------------------------------------

def table_operator(n, entries) -> OperatorSpec:
    """Entries may be a mapping or pairs; sets as bitmasks or element iterables."""
    items = entries.items() if isinstance(entries, Mapping) else entries
    return OperatorSpec(_ground(n), "table", tuple((as_mask(X), as_mask(v)) for X, v in items))


def full_operator(n) -> OperatorSpec:
    return OperatorSpec(_ground(n), "full")


def max_order_operator(n) -> OperatorSpec:
    return OperatorSpec(_ground(n), "max_order")


def chain_operator(n) -> OperatorSpec:
    return OperatorSpec(_ground(n), "chain")


def poset_min_operator(poset: Poset) -> OperatorSpec:
    return OperatorSpec(poset.ground, "poset_min", poset=poset)


def operator_from_family(fam: SetFamily) -> OperatorSpec:
    """The basis operator Psi(X) = Gamma(B_X) of an antimatroid."""
    if not is_antimatroid(fam):
        raise NotAntimatroidError("operator_from_family needs an antimatroid")
    return OperatorSpec(fam.ground, "basis_of_family", family=fam)


def truncated_operator(op: OperatorSpec, k_minus_1: int) -> OperatorSpec:
    if k_minus_1 < 0:
        raise DomainError("truncation cutoff must be non-negative")
    return OperatorSpec(op.ground, "truncated", inner=op, cutoff=k_minus_1)


def materialize(op: OperatorSpec) -> OperatorSpec:
    """Table operator holding every non-empty value of ``op`` (small n only)."""
    if op.n > 20:
        raise DomainError("materialize is limited to n <= 20")
    entries = []
    for X in range(1 << op.n):
        v = evaluate(op, X)
        if v:
            entries.append((X, v))
    return OperatorSpec(op.ground, "table", tuple(entries))


# -- evaluation ----------------------------------------------------------------

def evaluate(op: OperatorSpec, X) -> int:
    X = op.ground.check(as_mask(X))
    kind = op.kind
    full = op.ground.full
    if kind == "table":
        return op._lookup.get(X, 0)
    if kind == "full":
        return full & ~X
    if kind == "max_order":
        return full & ~((1 << X.bit_length()) - 1)
    if kind == "chain":
        top = X.bit_length()
        return (1 << top) & full
    if kind == "poset_min":
        return op.poset.minimal(full & ~X)
    if kind == "basis_of_family":
        fam = op.family
        B = _basis(fam.sets, X)
        out = 0
        rest = full & ~B
        while rest:
            low = rest & -rest
            if B | low in fam.members:
                out |= low
            rest ^= low
        return out
    # truncated
    if size(X) > op.cutoff:
        return 0
    return evaluate(op.inner, X)


def dense_values(op: OperatorSpec) -> list[int]:
    """Psi(X) for every X < 2**n, indexed by bitmask."""
    if op.n > 24:
        raise DomainError("dense evaluation is limited to n <= 24")
    if op.kind == "table":
        dense = [0] * (1 << op.n)
        for X, v in op.table:
            dense[X] = v
        return dense
    return [evaluate(op, X) for X in range(1 << op.n)]


# -- the Psi-Algorithm --------------------------------------------------------

def generate_family(op: OperatorSpec) -> tuple[SetFamily, GenerationTrace]:
    """Run the Psi-Algorithm level by level: T_{i+1} = {X + x : X in T_i, x in Psi(X)}."""
    parents: dict[int, tuple[int, int]] = {}
    levels = []
    level = [0]
    while level:
        levels.append(tuple(level))
        nxt = []
        for X in level:
            psi = evaluate(op, X)
            while psi:
                low = psi & -psi
                Y = X | low
                if Y not in parents:
                    parents[Y] = (X, low.bit_length())
                    nxt.append(Y)
                psi ^= low
        level = sorted(nxt, key=canonical_key)
    sets = tuple(S for lvl in levels for S in lvl)
    return SetFamily(op.ground, sets), GenerationTrace(parents, tuple(levels))


# -- isotonicity ----------------------------------------------------------------

def _witness(raw, cutoff=False):
    if raw is None:
        return None
    A, B, low = raw
    return IsotoneWitness(A, B, low.bit_length(), cutoff)


def check_isotone(op: OperatorSpec, scope: str = "all_subsets") -> IsotoneWitness | None:
    """First witness (A, B, a) against Psi(A) & (E - B) <= Psi(B), or None.

    ``scope="all_subsets"`` sweeps every pair A <= B of subsets (n <= 16);
    ``scope="feasible_only"`` restricts A and B to the generated family.
    Witnesses are ordered by (A, B, a) with sets in canonical order.
    """
    if scope == "all_subsets":
        if op.n > MAX_SWEEP:
            raise DomainError(
                f"all_subsets sweep limited to n <= {MAX_SWEEP}; use scope='feasible_only'"
            )
        return _witness(kernels.dense_isotone_witness(dense_values(op), op.n, canonical_order(op.n)))
    if scope == "feasible_only":
        fam, _ = generate_family(op)
        psi = [evaluate(op, X) for X in fam.sets]
        return _witness(kernels.family_isotone_witness(fam.sets, psi))
    raise DomainError(f"unknown scope {scope!r}")


def is_isotone(op: OperatorSpec, scope: str = "all_subsets") -> bool:
    return check_isotone(op, scope) is None


def check_k_isotone(op: OperatorSpec, k_minus_1: int) -> IsotoneWitness | None:
    """Check (k-1)-isotonicity of ``op`` itself.

    Condition one restricted to pairs A <= B with |B| <= k-1, plus Psi(X) empty
    whenever |X| >= k. The first failing clause is reported in that order.
    """
    if op.n > MAX_SWEEP:
        raise DomainError(f"exhaustive sweep limited to n <= {MAX_SWEEP}")
    if k_minus_1 < 0:
        raise DomainError("cutoff must be non-negative")
    dense = dense_values(op)
    order = canonical_order(op.n)
    w = _witness(kernels.dense_isotone_witness(dense, op.n, order, k_minus_1))
    if w is not None:
        return w
    for X in order:
        if size(X) > k_minus_1 and dense[X]:
            low = dense[X] & -dense[X]
            return IsotoneWitness(X, X, low.bit_length(), cutoff=True)
    return None


def agree_on(op1: OperatorSpec, op2: OperatorSpec, fam: SetFamily) -> bool:
    """Whether two operators coincide on every member of ``fam``."""
    return all(evaluate(op1, X) == evaluate(op2, X) for X in fam.sets)


def describe(op: OperatorSpec) -> str:
    if op.kind == "truncated":
        return f"truncated({describe(op.inner)}, {op.cutoff})"
    return f"{op.kind}(n={op.n})"


def entries(op: OperatorSpec) -> Iterable[tuple[list[int], list[int]]]:
    """Table entries as element lists, for serialization."""
    for X, v in op.table:
        yield elements(X), elements(v)
