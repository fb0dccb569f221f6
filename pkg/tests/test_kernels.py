"""Compiled and pure-Python kernels against naive frozenset definitions."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimatroid import _pykernels, kernels
from antimatroid.sets import canonical_order

try:
    from antimatroid import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="compiled"))


def fs(m):
    return frozenset(i + 1 for i in range(m.bit_length()) if m >> i & 1)


def naive_accessible(sets):
    F = {fs(m) for m in sets}
    return frozenset() in F and all(any(X - {x} in F for x in X) for X in F if X)


def naive_union_closed(sets):
    F = {fs(m) for m in sets}
    return all(X | Y in F for X in F for Y in F)


def naive_exchange(sets):
    F = {fs(m) for m in sets}
    return all(any(Y | {x} in F for x in X - Y) for X in F for Y in F if not X <= Y)


def naive_interval(sets, n):
    F = {fs(m) for m in sets}
    E = frozenset(range(1, n + 1))
    return all(
        Y | {x} in F for X in F for Y in F if X <= Y for x in E - Y if X | {x} in F
    )


def naive_dense_witness(dense, n, max_size=-1):
    order = canonical_order(n)
    for A in order:
        for B in order:
            if A & ~B or (max_size >= 0 and bin(B).count("1") > max_size):
                continue
            viol = dense[A] & ~B & ~dense[B]
            if viol:
                return A, B, viol & -viol
    return None


random_families = st.builds(
    lambda n, bits: (n, [m for m in range(1 << n) if bits >> m & 1]),
    st.integers(1, 4),
    st.integers(0, 2**16 - 1),
)


@pytest.mark.parametrize("k", BACKENDS)
@settings(max_examples=300, deadline=None)
@given(random_families)
def test_predicates_match_naive(k, nf):
    n, sets = nf
    sets = [m for m in sets if m < 1 << n]
    assert k.is_accessible(sets) == naive_accessible(sets)
    assert k.is_union_closed(sets) == naive_union_closed(sets)
    assert k.satisfies_exchange(sets) == naive_exchange(sets)
    assert k.has_interval_property(sets) == naive_interval(sets, n)
    closure = {fs(m) for m in k.union_closure(sets)}
    assert naive_union_closed([sum(1 << (x - 1) for x in X) for X in closure])
    assert {fs(m) for m in sets} <= closure


@pytest.mark.parametrize("k", BACKENDS)
@pytest.mark.parametrize("seed", range(60))
def test_dense_witness_matches_pair_sweep(k, seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    full = (1 << n) - 1
    dense = [rng.randrange(1 << n) & ~X & full for X in range(1 << n)]
    if seed % 3 == 0:  # isotone: full operator
        dense = [full & ~X for X in range(1 << n)]
    max_size = rng.choice([-1, 0, 1, 2])
    assert k.dense_isotone_witness(dense, n, canonical_order(n), max_size) == naive_dense_witness(
        dense, n, max_size
    )


@pytest.mark.parametrize("k", BACKENDS)
def test_family_witness(k):
    # N3 family in canonical order with its Psi values
    sets = [0, 1, 2, 3, 5, 6, 7]
    psi = [3, 6, 4, 4, 2, 1, 0]
    assert k.family_isotone_witness(sets, psi) == (0, 2, 1)
    assert k.family_isotone_witness([0, 1], [1, 0]) is None


def test_selected_backend_is_consistent():
    assert kernels.BACKEND in ("compiled", "python")
    assert (kernels.backend is _pykernels) == (kernels.BACKEND == "python")


def test_pure_override():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ANTIMATROID_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import antimatroid; print(antimatroid.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout
    assert out.strip() == "python"
