"""Pure-Python set-system kernels over bitmask families.

Same signatures and results as the compiled ``_ckernels`` module; used when the
extension is unavailable or ``ANTIMATROID_PURE=1`` is set.
"""


def is_accessible(masks):
    members = set(masks)
    if 0 not in members:
        return False
    for X in members:
        rest = X
        while rest:
            low = rest & -rest
            if X ^ low in members:
                break
            rest ^= low
        else:
            if X:
                return False
    return True


def is_union_closed(masks):
    members = set(masks)
    seq = list(members)
    for i, X in enumerate(seq):
        for Y in seq[i + 1:]:
            if X | Y not in members:
                return False
    return True


def satisfies_exchange(masks):
    members = set(masks)
    for X in members:
        for Y in members:
            diff = X & ~Y
            if not diff:
                continue
            while diff:
                low = diff & -diff
                if Y | low in members:
                    break
                diff ^= low
            else:
                return False
    return True


def _continuations(members):
    gamma = dict.fromkeys(members, 0)
    for Y in members:
        rest = Y
        while rest:
            low = rest & -rest
            if Y ^ low in gamma:
                gamma[Y ^ low] |= low
            rest ^= low
    return gamma


def has_interval_property(masks):
    gamma = _continuations(set(masks))
    for X, gx in gamma.items():
        if not gx:
            continue
        for Y, gy in gamma.items():
            if X & ~Y == 0 and gx & ~Y & ~gy:
                return False
    return True


def union_closure(masks):
    closure = set(masks)
    frontier = list(closure)
    while frontier:
        fresh = []
        base = list(closure)
        for X in frontier:
            for Y in base:
                Z = X | Y
                if Z not in closure:
                    closure.add(Z)
                    fresh.append(Z)
        frontier = fresh
    return list(closure)


def dense_isotone_witness(dense, n, order, max_size=-1):
    """First (A, B, a) in ``order`` violating Psi(A) & ~B <= Psi(B) for A <= B.

    ``dense[X]`` is Psi(X) for every X < 2**n. With ``max_size >= 0`` only
    pairs with |B| <= max_size are considered.
    """
    size = 1 << n
    full = size - 1
    # bad[X]: elements a with some B >= X, a not in B, a not in Psi(B)
    bad = [0] * size
    for X in range(full, -1, -1):
        acc = 0
        if max_size < 0 or bin(X).count("1") <= max_size:
            acc = full & ~X & ~dense[X]
        rest = full & ~X
        while rest:
            low = rest & -rest
            acc |= bad[X | low] & ~low
            rest ^= low
        bad[X] = acc
    for A in order:
        if dense[A] & bad[A]:
            break
    else:
        return None
    psi_a = dense[A]
    for B in order:
        if A & ~B or B == A:
            continue
        if max_size >= 0 and bin(B).count("1") > max_size:
            continue
        viol = psi_a & ~B & ~dense[B]
        if viol:
            return A, B, viol & -viol
    raise AssertionError("violating set without a witness")


def family_isotone_witness(ordered, psi):
    """Same search restricted to pairs drawn from ``ordered`` (canonical order)."""
    for i, A in enumerate(ordered):
        pa = psi[i]
        if not pa:
            continue
        for j, B in enumerate(ordered):
            if A & ~B or B == A:
                continue
            viol = pa & ~B & ~psi[j]
            if viol:
                return A, B, viol & -viol
    return None
