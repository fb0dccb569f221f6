"""Ground sets, bitmask subsets and feasible families.

A subset of the ground set {1..n} is a Python ``int`` whose bit ``i-1`` is set
when element ``i`` is a member. Families are stored in canonical order: by
size, then lexicographically by their sorted element tuples.
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import kernels
from .errors import DomainError, NotAntimatroidError, VerificationError

MAX_GROUND = 64

_verify = os.environ.get("ANTIMATROID_VERIFY") == "1"


@contextmanager
def verification(enabled: bool = True):
    """Enable the extra cross-checks (equivalences, closure accessibility) in a block."""
    global _verify
    saved, _verify = _verify, enabled
    try:
        yield
    finally:
        _verify = saved


def verifying() -> bool:
    return _verify


# -- subset arithmetic -------------------------------------------------------

def bit(x: int) -> int:
    return 1 << (x - 1)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        if x < 1:
            raise DomainError(f"element identifiers start at 1, got {x}")
        m |= 1 << (x - 1)
    return m


def as_mask(X) -> int:
    """Accept a bitmask int or an iterable of element identifiers."""
    if isinstance(X, int):
        if X < 0:
            raise DomainError("negative bitmask")
        return X
    return mask_of(X)


def elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def size(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Smallest element of a non-empty mask."""
    return (mask & -mask).bit_length()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return size(mask), tuple(elements(mask))


def fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


@lru_cache(maxsize=32)
def canonical_order(n: int) -> tuple[int, ...]:
    """All 2**n subsets in canonical order."""
    return tuple(sorted(range(1 << n), key=canonical_key))


# -- domain types ------------------------------------------------------------

@dataclass(frozen=True)
class GroundSet:
    n: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise DomainError(f"ground set size must be in 1..{MAX_GROUND}, got {self.n}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise DomainError("labels must be n distinct names")
            object.__setattr__(self, "labels", labels)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def check(self, mask: int) -> int:
        if mask & ~self.full:
            raise DomainError(f"{fmt_set(mask)} is not a subset of {{1..{self.n}}}")
        return mask

    def complement(self, mask: int) -> int:
        return self.full & ~mask


def _ground(g) -> GroundSet:
    return g if isinstance(g, GroundSet) else GroundSet(g)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of subsets of ``ground``, canonically ordered."""

    ground: GroundSet
    sets: tuple[int, ...]

    def __post_init__(self):
        g = _ground(self.ground)
        object.__setattr__(self, "ground", g)
        masks = {g.check(as_mask(X)) for X in self.sets}
        object.__setattr__(self, "sets", tuple(sorted(masks, key=canonical_key)))

    @classmethod
    def of(cls, n, sets: Iterable) -> SetFamily:
        return cls(_ground(n), tuple(as_mask(X) for X in sets))

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.sets)

    def __contains__(self, X) -> bool:
        return as_mask(X) in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [elements(X) for X in self.sets]

    @cached_property
    def union_closed(self) -> bool:
        return kernels.is_union_closed(self.sets)

    @cached_property
    def accessible(self) -> bool:
        return kernels.is_accessible(self.sets)


@dataclass(frozen=True)
class Poset:
    """Strict order on the ground set given by cover pairs (a, b), meaning a < b."""

    ground: GroundSet
    covers: frozenset[tuple[int, int]]
    below: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = _ground(self.ground)
        object.__setattr__(self, "ground", g)
        covers = frozenset((int(a), int(b)) for a, b in self.covers)
        object.__setattr__(self, "covers", covers)
        below = [0] * (g.n + 1)
        for a, b in covers:
            if not (1 <= a <= g.n and 1 <= b <= g.n):
                raise DomainError(f"cover ({a},{b}) outside ground set")
            below[b] |= bit(a)
        # transitive closure of strict predecessors
        changed = True
        while changed:
            changed = False
            for x in range(1, g.n + 1):
                acc = below[x]
                for y in elements(below[x]):
                    acc |= below[y]
                if acc != below[x]:
                    below[x] = acc
                    changed = True
        for x in range(1, g.n + 1):
            if below[x] & bit(x):
                raise DomainError(f"cover relation has a cycle through {x}")
        object.__setattr__(self, "below", tuple(below))

    def less(self, a: int, b: int) -> bool:
        return bool(self.below[b] & bit(a))

    def minimal(self, mask: int) -> int:
        """Minimal elements of ``mask`` under the order."""
        out = 0
        for x in elements(mask):
            if not self.below[x] & mask:
                out |= bit(x)
        return out


# -- predicates --------------------------------------------------------------

def is_accessible(fam: SetFamily) -> bool:
    return fam.accessible


def satisfies_exchange(fam: SetFamily) -> bool:
    return kernels.satisfies_exchange(fam.sets)


def is_union_closed(fam: SetFamily) -> bool:
    return fam.union_closed


def has_interval_property(fam: SetFamily) -> bool:
    return kernels.has_interval_property(fam.sets)


def is_antimatroid(fam: SetFamily) -> bool:
    """Accessible and closed under union.

    In verification mode, accessible families are also checked to agree on the
    exchange axiom and the interval property without upper bounds.
    """
    result = fam.accessible and fam.union_closed
    if _verify and fam.accessible:
        exch = satisfies_exchange(fam)
        interval = has_interval_property(fam)
        if not result == exch == interval:
            raise VerificationError(
                f"axiom disagreement: union_closed={result} exchange={exch} interval={interval}"
            )
    return result


def _require_union_closed(fam: SetFamily, what: str):
    if not fam.union_closed:
        raise NotAntimatroidError(f"{what} needs a union-closed family")


def feasible_continuations(fam: SetFamily, X) -> int:
    """Gamma(X): elements x outside X with X + x feasible."""
    X = as_mask(X)
    if X not in fam.members:
        raise DomainError(f"{fmt_set(X)} is not feasible")
    out = 0
    rest = fam.ground.complement(X)
    while rest:
        low = rest & -rest
        if X | low in fam.members:
            out |= low
        rest ^= low
    return out


def _basis(sets: Iterable[int], X: int) -> int:
    B = 0
    for Y in sets:
        if not Y & ~X:
            B |= Y
    return B


def basis_of(fam: SetFamily, X) -> int:
    """The unique maximal feasible subset of X."""
    _require_union_closed(fam, "basis_of")
    return _basis(fam.sets, fam.ground.check(as_mask(X)))


def rank(fam: SetFamily, X=None) -> int:
    """Size of the largest feasible subset of X (of the ground set by default)."""
    X = fam.ground.full if X is None else as_mask(X)
    return max((size(Y) for Y in fam.sets if not Y & ~X), default=0)


def max_feasible(fam: SetFamily) -> int:
    """E_F, the union of all feasible sets."""
    if not fam.sets:
        raise DomainError("empty family has no maximal feasible set")
    _require_union_closed(fam, "max_feasible")
    out = 0
    for X in fam.sets:
        out |= X
    return out


def truncate(fam: SetFamily, k: int) -> SetFamily:
    if k < 0:
        raise DomainError("truncation level must be non-negative")
    return SetFamily(fam.ground, tuple(X for X in fam.sets if size(X) <= k))


def close_under_union(fam: SetFamily) -> SetFamily:
    """Smallest union-closed family containing ``fam``."""
    out = SetFamily(fam.ground, tuple(kernels.union_closure(fam.sets)))
    if _verify and fam.accessible and not out.accessible:
        raise VerificationError("union closure of an accessible family lost accessibility")
    return out


def maximal_members(fam: SetFamily) -> list[int]:
    """Inclusion-maximal members, in canonical order."""
    sets = fam.sets
    return [X for X in sets if not any(X != Y and not X & ~Y for Y in sets)]


def axiom_violation(fam: SetFamily, axiom: str) -> str | None:
    """Human-readable first violation of ``axiom``, or None when it holds.

    ``axiom`` is one of accessible, union_closed, exchange, interval.
    """
    sets = fam.sets
    members = fam.members
    if axiom == "accessible":
        if 0 not in members:
            return "empty set missing"
        for X in sets:
            if X and not any(X ^ bit(x) in members for x in elements(X)):
                return f"X={fmt_set(X)} has no feasible parent"
        return None
    if axiom == "union_closed":
        for i, X in enumerate(sets):
            for Y in sets[i + 1:]:
                if X | Y not in members:
                    return f"X={fmt_set(X)} Y={fmt_set(Y)} union missing"
        return None
    if axiom == "exchange":
        for X in sets:
            for Y in sets:
                if X & ~Y and not any(Y | bit(x) in members for x in elements(X & ~Y)):
                    return f"X={fmt_set(X)} Y={fmt_set(Y)} no x in X-Y extends Y"
        return None
    if axiom == "interval":
        for X in sets:
            for Y in sets:
                if X & ~Y:
                    continue
                for x in elements(fam.ground.complement(Y)):
                    if X | bit(x) in members and Y | bit(x) not in members:
                        return f"X={fmt_set(X)} Y={fmt_set(Y)} x={x}"
        return None
    raise DomainError(f"unknown axiom {axiom!r}")
