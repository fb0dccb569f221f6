# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled set-system kernels; mirror of ``_pykernels``."""

from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector


cdef inline uint64_t _low(uint64_t x) nogil:
    return x & (~x + 1)


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef vector[uint64_t] _distinct(masks, unordered_set[uint64_t]& members):
    cdef vector[uint64_t] seq
    cdef uint64_t m
    for obj in masks:
        m = obj
        if members.insert(m).second:
            seq.push_back(m)
    return seq


def is_accessible(masks):
    cdef unordered_set[uint64_t] members
    cdef vector[uint64_t] seq = _distinct(masks, members)
    cdef uint64_t X, rest, low
    cdef bint ok
    if members.count(0) == 0:
        return False
    return _accessible(seq, members)


cdef bint _accessible(vector[uint64_t]& seq, unordered_set[uint64_t]& members) nogil:
    cdef uint64_t X, rest, low
    cdef bint ok
    for X in seq:
        if X == 0:
            continue
        ok = False
        rest = X
        while rest:
            low = _low(rest)
            if members.count(X ^ low):
                ok = True
                break
            rest ^= low
        if not ok:
            return False
    return True


def is_union_closed(masks):
    cdef unordered_set[uint64_t] members
    cdef vector[uint64_t] seq = _distinct(masks, members)
    return _union_closed(seq, members)


cdef bint _union_closed(vector[uint64_t]& seq, unordered_set[uint64_t]& members) nogil:
    cdef size_t i, j, m = seq.size()
    for i in range(m):
        for j in range(i + 1, m):
            if members.count(seq[i] | seq[j]) == 0:
                return False
    return True


def satisfies_exchange(masks):
    cdef unordered_set[uint64_t] members
    cdef vector[uint64_t] seq = _distinct(masks, members)
    return _exchange(seq, members)


cdef bint _exchange(vector[uint64_t]& seq, unordered_set[uint64_t]& members) nogil:
    cdef uint64_t X, Y, diff, low
    cdef bint ok
    for X in seq:
        for Y in seq:
            diff = X & ~Y
            if diff == 0:
                continue
            ok = False
            while diff:
                low = _low(diff)
                if members.count(Y | low):
                    ok = True
                    break
                diff ^= low
            if not ok:
                return False
    return True


def has_interval_property(masks):
    cdef unordered_set[uint64_t] members
    cdef vector[uint64_t] seq = _distinct(masks, members)
    cdef unordered_map[uint64_t, size_t] index
    cdef vector[uint64_t] gamma
    cdef size_t i, j, m = seq.size()
    cdef uint64_t Y, rest, low, X
    for i in range(m):
        index[seq[i]] = i
    gamma.resize(m, 0)
    for i in range(m):
        Y = seq[i]
        rest = Y
        while rest:
            low = _low(rest)
            if index.count(Y ^ low):
                gamma[index[Y ^ low]] |= low
            rest ^= low
    return _interval(seq, gamma)


cdef bint _interval(vector[uint64_t]& seq, vector[uint64_t]& gamma) nogil:
    cdef size_t i, j, m = seq.size()
    cdef uint64_t X, Y
    for i in range(m):
        if gamma[i] == 0:
            continue
        X = seq[i]
        for j in range(m):
            Y = seq[j]
            if (X & ~Y) == 0 and (gamma[i] & ~Y & ~gamma[j]):
                return False
    return True


def union_closure(masks):
    cdef unordered_set[uint64_t] closure
    cdef vector[uint64_t] seq = _distinct(masks, closure)
    cdef vector[uint64_t] frontier = seq
    cdef vector[uint64_t] fresh
    cdef vector[uint64_t] base
    cdef uint64_t X, Y, Z
    with nogil:
        while frontier.size():
            fresh.clear()
            base = seq
            for X in frontier:
                for Y in base:
                    Z = X | Y
                    if closure.insert(Z).second:
                        fresh.push_back(Z)
                        seq.push_back(Z)
            frontier = fresh
    return [Z for Z in seq]


def dense_isotone_witness(dense, int n, order, int max_size=-1):
    cdef size_t size = (<size_t>1) << n
    cdef uint64_t full = <uint64_t>(size - 1)
    cdef vector[uint64_t] psi
    cdef vector[uint64_t] ords
    cdef vector[uint64_t] bad
    cdef uint64_t X, acc, rest, low, A = 0, B, psi_a, viol
    cdef long long k
    cdef bint found = False
    psi.reserve(size)
    for obj in dense:
        psi.push_back(obj)
    for obj in order:
        ords.push_back(obj)
    bad.resize(size, 0)
    with nogil:
        for k in range(<long long>size - 1, -1, -1):
            X = <uint64_t>k
            acc = 0
            if max_size < 0 or _popcount(X) <= max_size:
                acc = full & ~X & ~psi[X]
            rest = full & ~X
            while rest:
                low = _low(rest)
                acc |= bad[X | low] & ~low
                rest ^= low
            bad[X] = acc
        for X in ords:
            if psi[X] & bad[X]:
                A = X
                found = True
                break
    if not found:
        return None
    psi_a = psi[A]
    for B in ords:
        if (A & ~B) or B == A:
            continue
        if max_size >= 0 and _popcount(B) > max_size:
            continue
        viol = psi_a & ~B & ~psi[B]
        if viol:
            return A, B, _low(viol)
    raise AssertionError("violating set without a witness")


def family_isotone_witness(ordered, psi):
    cdef vector[uint64_t] sets
    cdef vector[uint64_t] vals
    cdef size_t i, j, m
    cdef uint64_t A, B, pa, viol
    for obj in ordered:
        sets.push_back(obj)
    for obj in psi:
        vals.push_back(obj)
    m = sets.size()
    for i in range(m):
        pa = vals[i]
        if pa == 0:
            continue
        A = sets[i]
        for j in range(m):
            B = sets[j]
            if (A & ~B) or B == A:
                continue
            viol = pa & ~B & ~vals[j]
            if viol:
                return A, B, _low(viol)
    return None
