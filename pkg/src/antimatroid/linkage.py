"""Monotone linkage functions pi(x, X) and the objectives built from them.

Kinds:

``table``
    explicit values, total over {(x, X) : x not in X}
``weight_minus_size``
    pi(x, X) = w_x - |X|
``single_linkage``
    pi(x, X) = min over y in X of d(x, y); pi(x, empty) = the configured value M
``failure``
    the two-valued linkage that defeats the Chain Algorithm on a non-isotone
    operator (see :func:`failure_linkage`)
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .errors import DomainError, EmptyContinuationError
from .operators import GenerationTrace, IsotoneWitness, OperatorSpec, evaluate
from .sets import GroundSet, _ground, as_mask, bit, canonical_order, elements, fmt_set

KINDS = ("table", "weight_minus_size", "single_linkage", "failure")

MAX_SWEEP = 16


@dataclass(frozen=True)
class FailureParams:
    """Chain A_0 < A_1 < ... < A_k = A < A + a and its added letters a_1 .. a_{k+1}."""

    prefixes: tuple[int, ...]  # A_0 .. A_k
    letters: tuple[int, ...]  # a_1 .. a_{k+1}
    target: int  # A + a


@dataclass(frozen=True)
class LinkageSpec:
    ground: GroundSet
    kind: str
    table: tuple[tuple[int, int, float], ...] = ()
    weights: tuple[float, ...] = ()
    distances: tuple[tuple[float, ...], ...] = ()
    empty_value: float | None = None
    failure: FailureParams | None = None
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g = _ground(self.ground)
        object.__setattr__(self, "ground", g)
        if self.kind not in KINDS:
            raise DomainError(f"unknown linkage kind {self.kind!r}")
        lookup = {}
        if self.kind == "table":
            for x, X, value in self.table:
                if not 1 <= x <= g.n or X & ~g.full:
                    raise DomainError(f"table entry ({x}, {fmt_set(X)}) outside ground set")
                if X & bit(x):
                    raise DomainError(f"table entry ({x}, {fmt_set(X)}) has x in X")
                if (x, X) in lookup:
                    raise DomainError(f"duplicate entry ({x}, {fmt_set(X)})")
                lookup[x, X] = float(value)
            expected = g.n << (g.n - 1)
            if len(lookup) != expected:
                missing = _first_missing(g, lookup)
                raise DomainError(
                    f"table linkage must be total; missing ({missing[0]}, {fmt_set(missing[1])})"
                )
            object.__setattr__(
                self, "table", tuple((x, X, v) for (x, X), v in sorted(lookup.items()))
            )
        elif self.kind == "weight_minus_size":
            if len(self.weights) != g.n:
                raise DomainError("weight_minus_size needs one weight per element")
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        elif self.kind == "single_linkage":
            d = tuple(tuple(float(v) for v in row) for row in self.distances)
            if len(d) != g.n or any(len(row) != g.n for row in d):
                raise DomainError("single_linkage needs an n x n distance matrix")
            for i in range(g.n):
                for j in range(g.n):
                    if d[i][j] != d[j][i]:
                        raise DomainError("distance matrix must be symmetric")
            object.__setattr__(self, "distances", d)
            top = max((v for row in d for v in row), default=0.0)
            M = 2 * top + 1 if self.empty_value is None else float(self.empty_value)
            if M < top:
                raise DomainError(f"empty-set value {M} must dominate every distance ({top})")
            object.__setattr__(self, "empty_value", M)
        elif self.kind == "failure" and self.failure is None:
            raise DomainError("failure linkage needs FailureParams")
        object.__setattr__(self, "_lookup", lookup)

    @property
    def n(self) -> int:
        return self.ground.n

    def __call__(self, x: int, X) -> float:
        return linkage_value(self, x, X)


def _first_missing(g: GroundSet, lookup) -> tuple[int, int]:
    for X in canonical_order(g.n) if g.n <= 20 else range(1 << g.n):
        for x in range(1, g.n + 1):
            if not X & bit(x) and (x, X) not in lookup:
                return x, X
    raise AssertionError("no missing entry")


class ObjectiveValue(NamedTuple):
    value: float
    argmin_element: int


class MonotoneWitness(NamedTuple):
    """pi(x, X) < pi(x, Y) although X <= Y."""

    x: int
    X: int
    Y: int

    def describe(self) -> str:
        return f"x={self.x} X={fmt_set(self.X)} Y={fmt_set(self.Y)}"


# -- constructors -------------------------------------------------------------

def table_linkage(n, entries) -> LinkageSpec:
    """``entries``: mapping (x, X) -> value, or triples (x, X, value)."""
    if isinstance(entries, Mapping):
        items = [(x, X, v) for (x, X), v in entries.items()]
    else:
        items = list(entries)
    return LinkageSpec(_ground(n), "table", tuple((int(x), as_mask(X), v) for x, X, v in items))


def weight_minus_size(weights) -> LinkageSpec:
    weights = tuple(weights)
    return LinkageSpec(GroundSet(len(weights)), "weight_minus_size", weights=weights)


def single_linkage(distances, empty_value: float | None = None) -> LinkageSpec:
    distances = tuple(tuple(row) for row in distances)
    return LinkageSpec(
        GroundSet(len(distances)), "single_linkage", distances=distances, empty_value=empty_value
    )


def materialize(pi: LinkageSpec) -> LinkageSpec:
    """Equivalent table linkage (small n only)."""
    if pi.n > 16:
        raise DomainError("materialize is limited to n <= 16")
    entries = []
    for X in range(1 << pi.n):
        for x in range(1, pi.n + 1):
            if not X & bit(x):
                entries.append((x, X, linkage_value(pi, x, X)))
    return LinkageSpec(pi.ground, "table", tuple(entries))


# -- evaluation ----------------------------------------------------------------

def linkage_value(pi: LinkageSpec, x: int, X) -> float:
    X = pi.ground.check(as_mask(X))
    if not 1 <= x <= pi.n:
        raise DomainError(f"element {x} outside ground set")
    if X & bit(x):
        raise DomainError(f"pi({x}, {fmt_set(X)}) undefined: x is in X")
    kind = pi.kind
    if kind == "table":
        return pi._lookup[x, X]
    if kind == "weight_minus_size":
        return pi.weights[x - 1] - bin(X).count("1")
    if kind == "single_linkage":
        if not X:
            return pi.empty_value
        row = pi.distances[x - 1]
        return min(row[y - 1] for y in elements(X))
    fp = pi.failure
    if fp.target & ~X == 0:
        return 1.0
    for prefix, letter in zip(fp.prefixes, fp.letters):
        if letter == x and prefix & ~X == 0:
            return 1.0
    return 2.0


def check_monotone(
    pi: LinkageSpec, sampled: bool = False, samples: int = 2000, seed: int = 0
) -> MonotoneWitness | None:
    """First witness with X <= Y and pi(x, X) < pi(x, Y), or None when monotone.

    The exhaustive sweep (n <= 16) compares covering pairs Y = X + y, which
    suffices because the order is transitive along chains. ``sampled`` draws
    random maximal chains instead and compares all pairs on each.
    """
    n = pi.n
    if not sampled:
        if n > MAX_SWEEP:
            raise DomainError(f"exhaustive sweep limited to n <= {MAX_SWEEP}; pass sampled=True")
        full = pi.ground.full
        for x in range(1, n + 1):
            bx = bit(x)
            for X in canonical_order(n):
                if X & bx:
                    continue
                vx = linkage_value(pi, x, X)
                rest = full & ~X & ~bx
                while rest:
                    low = rest & -rest
                    if vx < linkage_value(pi, x, X | low):
                        return MonotoneWitness(x, X, X | low)
                    rest ^= low
        return None
    rng = random.Random(seed)
    for _ in range(samples):
        x = rng.randint(1, n)
        others = [y for y in range(1, n + 1) if y != x]
        rng.shuffle(others)
        chain = [0]
        for y in others:
            chain.append(chain[-1] | bit(y))
        values = [linkage_value(pi, x, X) for X in chain]
        for i in range(len(chain)):
            for j in range(i + 1, len(chain)):
                if values[i] < values[j]:
                    return MonotoneWitness(x, chain[i], chain[j])
    return None


def objective_F(pi: LinkageSpec, X) -> ObjectiveValue:
    """F(X) = min over x outside X of pi(x, X); ties go to the smallest element."""
    X = pi.ground.check(as_mask(X))
    outside = pi.ground.complement(X)
    if not outside:
        raise DomainError("F(E) is undefined: no element outside E")
    return _min_over(pi, outside, X)


def objective_F_psi(pi: LinkageSpec, op: OperatorSpec, X) -> ObjectiveValue:
    """F_Psi(X) = min over x in Psi(X) of pi(x, X)."""
    X = as_mask(X)
    cands = evaluate(op, X)
    if not cands:
        raise EmptyContinuationError(f"Psi({fmt_set(X)}) is empty; F_Psi undefined", X)
    return _min_over(pi, cands, X)


def _min_over(pi: LinkageSpec, cands: int, X: int) -> ObjectiveValue:
    best = None
    arg = 0
    while cands:
        low = cands & -cands
        x = low.bit_length()
        v = linkage_value(pi, x, X)
        if best is None or v < best:
            best, arg = v, x
        cands ^= low
    return ObjectiveValue(best, arg)


# -- the adversarial linkage ----------------------------------------------------

def failure_linkage(op: OperatorSpec, w: IsotoneWitness, trace: GenerationTrace) -> LinkageSpec:
    """Two-valued monotone linkage on which the Chain Algorithm misses the optimum.

    With the recorded chain A_0 < ... < A_k = A of the witness set A and
    a_{k+1} = a, pi(x, X) = 1 when X contains A_{i-1} and x = a_i for some i, or
    when X contains A + a; otherwise pi(x, X) = 2.
    """
    A, B, a = w.A, w.B, w.a
    ba = bit(a)
    if w.cutoff or A & ~B or A == B or B & ba:
        raise DomainError(f"not an isotone witness: {w.describe()}")
    if not evaluate(op, A) & ba or evaluate(op, B) & ba:
        raise DomainError(f"witness does not hold for this operator: {w.describe()}")
    steps = trace.chain(A)
    prefixes = [0]
    letters = []
    for S, x in steps:
        if not evaluate(op, prefixes[-1]) & bit(x) or prefixes[-1] | bit(x) != S:
            raise DomainError("trace inconsistent with operator")
        letters.append(x)
        prefixes.append(S)
    letters.append(a)
    params = FailureParams(tuple(prefixes), tuple(letters), A | ba)
    return LinkageSpec(op.ground, "failure", failure=params)
