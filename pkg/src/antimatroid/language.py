"""Antimatroid languages, the maximum nesting function and the greedy minimax solver.

Words are tuples of element identifiers; the empty tuple is the empty word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import DomainError, EmptyContinuationError, NotAntimatroidError
from .operators import OperatorSpec, evaluate
from .sets import GroundSet, SetFamily, _ground, bit, fmt_set, is_antimatroid

Word = tuple[int, ...]

# languages are only materialized up to this ground size
MAX_MATERIALIZE = 10


def support(word: Iterable[int]) -> int:
    m = 0
    for x in word:
        m |= bit(x)
    return m


def is_simple(word: Word) -> bool:
    return len(set(word)) == len(word)


def word_key(word: Word):
    return len(word), word


def fmt_word(word: Word) -> str:
    return " ".join(map(str, word)) if word else "-"


@dataclass(frozen=True)
class SimpleLanguage:
    ground: GroundSet
    words: frozenset[Word]

    def __post_init__(self):
        g = _ground(self.ground)
        object.__setattr__(self, "ground", g)
        words = frozenset(tuple(int(x) for x in w) for w in self.words)
        for w in words:
            if not is_simple(w):
                raise DomainError(f"word {fmt_word(w)} repeats a letter")
            if any(not 1 <= x <= g.n for x in w):
                raise DomainError(f"word {fmt_word(w)} leaves the alphabet")
        if () not in words:
            raise DomainError("a language must contain the empty word")
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, n, words: Iterable[Iterable[int]]) -> SimpleLanguage:
        return cls(_ground(n), frozenset(tuple(w) for w in words))

    @property
    def prefix_closed(self) -> bool:
        return all(w[:-1] in self.words for w in self.words if w)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=word_key)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class NestingFunction:
    """f(x, A) for x in A; expected to be antitone in A."""

    func: Callable[[int, int], float]

    def __call__(self, x: int, A: int) -> float:
        if not A & bit(x):
            raise DomainError(f"f({x}, {fmt_set(A)}) undefined: x must lie in A")
        return self.func(x, A)


def language_violation(lang: SimpleLanguage, axiom: str) -> str | None:
    """Witness for one axiom ("prefix" or "exchange"), or None when it holds."""
    words = lang.sorted_words()
    if axiom == "prefix":
        for w in words:
            if w and w[:-1] not in lang.words:
                return f"{fmt_word(w)} present but {fmt_word(w[:-1])} missing"
        return None
    if axiom == "exchange":
        supports = {w: support(w) for w in words}
        for a in words:
            for b in words:
                extra = supports[a] & ~supports[b]
                if extra and not any(b + (x,) in lang.words for x in a if extra & bit(x)):
                    return f"alpha={fmt_word(a)} beta={fmt_word(b)}"
        return None
    raise DomainError(f"unknown language axiom {axiom!r}")


def language_axiom_failure(lang: SimpleLanguage) -> str | None:
    """Name and witness of the first failing axiom, or None."""
    for axiom in ("prefix", "exchange"):
        w = language_violation(lang, axiom)
        if w is not None:
            return f"{axiom}: {w}"
    return None


def is_antimatroid_language(lang: SimpleLanguage) -> bool:
    return language_axiom_failure(lang) is None


def family_from_language(lang: SimpleLanguage) -> SetFamily:
    """F(L): the supports of the words."""
    failure = language_axiom_failure(lang)
    if failure:
        raise NotAntimatroidError(f"not an antimatroid language ({failure})")
    return SetFamily(lang.ground, tuple({support(w) for w in lang.words}))


def words_of(fam: SetFamily, max_length: int | None = None):
    """Yield every word whose prefix supports are all feasible, shortest first."""
    level = [((), 0)]
    length = 0
    while level:
        yield from (w for w, _ in level)
        if max_length is not None and length >= max_length:
            return
        nxt = []
        for w, S in level:
            rest = fam.ground.complement(S)
            while rest:
                low = rest & -rest
                if S | low in fam.members:
                    nxt.append((w + (low.bit_length(),), S | low))
                rest ^= low
        level = nxt
        length += 1


def language_from_family(fam: SetFamily) -> SimpleLanguage:
    """L(F): all orderings x_1 .. x_k with every {x_1 .. x_j} feasible."""
    if not is_antimatroid(fam):
        raise NotAntimatroidError("language_from_family needs an antimatroid")
    if fam.ground.n > MAX_MATERIALIZE:
        raise DomainError(
            f"languages are materialized only for n <= {MAX_MATERIALIZE}; use in_language"
        )
    return SimpleLanguage(fam.ground, frozenset(words_of(fam)))


def in_language(fam: SetFamily, word: Iterable[int]) -> bool:
    """Membership in L(F) without materializing the language."""
    S = 0
    for x in word:
        if S & bit(x):
            return False
        S |= bit(x)
        if S not in fam.members:
            return False
    return True


def nesting_W(f: Callable[[int, int], float], alpha: Word) -> float:
    """max_i f(x_i, {x_1 .. x_i})."""
    if not alpha:
        raise DomainError("W is undefined on the empty word")
    if not is_simple(tuple(alpha)):
        raise DomainError("W needs a simple word")
    return max(prefix_values(f, alpha))


def prefix_values(f: Callable[[int, int], float], alpha: Word) -> list[float]:
    """f(x_i, {x_1 .. x_i}) for each i."""
    out = []
    S = 0
    for x in alpha:
        S |= bit(x)
        out.append(f(x, S))
    return out


def greedy_minimax(op: OperatorSpec, f: Callable[[int, int], float], k: int) -> Word:
    """Greedy word x_1 .. x_k: each x_{i+1} minimizes f(x, X_i + x) over Psi(X_i).

    Ties go to the smallest element.
    """
    if k < 0:
        raise DomainError("k must be non-negative")
    word = []
    X = 0
    for _ in range(k):
        cands = evaluate(op, X)
        if not cands:
            raise EmptyContinuationError(
                f"greedy stuck at {fmt_set(X)} after {len(word)} letters; k={k} exceeds the rank", X
            )
        best, arg = None, 0
        while cands:
            low = cands & -cands
            v = f(low.bit_length(), X | low)
            if best is None or v < best:
                best, arg = v, low.bit_length()
            cands ^= low
        word.append(arg)
        X |= bit(arg)
    return tuple(word)
