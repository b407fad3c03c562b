"""Shared builders for the test suite.

Everything here is deterministic: random instances are driven by
explicitly seeded generators so failures reproduce exactly.
"""
import random

import numpy as np

from cssgates import (
    BitVector,
    MonomialCodeSpec,
    MonomialSet,
    NestedCodePair,
    build_css,
    divisibility_closure,
    dual_basis,
    kernel_perp,
    reed_muller_set,
    rref_basis,
)

POOL_SEED = 20260816


# ---------------------------------------------------------------- fixtures

def make_mono16_spec() -> MonomialCodeSpec:
    """Four-variable monomial pair: outer {1,x1,x2,x3,x4,x1x2}, inner {1}."""
    m = 4
    return MonomialCodeSpec(
        m,
        MonomialSet.from_tokens(m, ["1", "x1", "x2", "x3", "x4", "x1x2"]),
        MonomialSet.from_tokens(m, ["1"]),
    )


def make_rm_spec() -> MonomialCodeSpec:
    """First-order inside zeroth-order length-16 Reed-Muller pair."""
    return MonomialCodeSpec(4, reed_muller_set(4, 1), reed_muller_set(4, 0))


def make_pair2_css():
    """Two-qubit code: outer = all of F_2^2, inner = span{11}; one logical."""
    c1 = rref_basis([BitVector.from_string("11"), BitVector.from_string("10")], n=2)
    c2 = rref_basis([BitVector.from_string("11")], n=2)
    return build_css(c1, c2)


def make_steane7_css():
    """[7,4] Hamming outer code with its dual (the [7,3] simplex) inside."""
    checks = [
        BitVector.from_string("1010101"),
        BitVector.from_string("0110011"),
        BitVector.from_string("0001111"),
    ]
    c2 = rref_basis(checks, n=7)
    c1 = dual_basis(c2)
    assert all(c1.contains(v) for v in c2.basis)
    return build_css(c1, c2)


# ------------------------------------------------------- random instances

def random_binary_code(rng: random.Random, n: int, k: int):
    rows = []
    while True:
        rows.append(BitVector(n, rng.randrange(1, 1 << n)))
        code = rref_basis(rows, n=n)
        rows = list(code.basis)
        if code.k == k:
            return code
        if code.k > k:
            rows = rows[:k]


def random_nested_css(rng: random.Random, n_max: int = 6, k1_max: int = 4):
    """Random nested pair as a CSS code; inner dimension may be 0 or k1."""
    n = rng.randrange(2, n_max + 1)
    k1 = rng.randrange(1, min(k1_max, n) + 1)
    c1 = random_binary_code(rng, n, k1)
    k2 = rng.randrange(0, k1 + 1)
    rows = []
    while True:
        code = rref_basis(rows, n=n)
        rows = list(code.basis)
        if code.k == k2:
            c2 = code
            break
        mask = rng.randrange(1, 1 << k1)
        word = BitVector(n)
        for j in range(k1):
            if mask >> j & 1:
                word ^= c1.basis[j]
        rows.append(word)
    return build_css(c1, c2)


def random_decreasing_spec(rng: random.Random, m_max: int = 5) -> MonomialCodeSpec:
    """Random divisibility-closed pair: closure of a few monomial tops."""
    m = rng.randrange(2, m_max + 1)
    tops = []
    for _ in range(rng.randrange(1, 4)):
        deg = rng.randrange(1, min(m - 1, 3) + 1)
        tops.append(sum(1 << i for i in rng.sample(range(m), deg)))
    outer = divisibility_closure(MonomialSet.from_masks(m, tops))
    inner_tops = [u for u in outer.masks if rng.randrange(2)]
    inner = divisibility_closure(MonomialSet.from_masks(m, inner_tops or [0]))
    return MonomialCodeSpec(m, outer, inner)


def realign_pair(pair: NestedCodePair, rng: random.Random) -> NestedCodePair:
    """Random coset-respecting realignment of the aligned bases.

    Re-bases the inner code, shifts each logical representative by inner
    words, and permutes the representatives. Mixing representatives into
    one another over GF(2) is deliberately excluded: it relabels the
    cosets and genuinely changes which actions factor into single-qubit
    gates (see test_gates.test_transversal_not_invariant_under_mixing).
    """
    K = pair.num_logical
    k2 = len(pair.beta2)
    n = pair.n
    new_beta2 = pair.beta2
    if k2:
        while True:
            masks = [rng.randrange(1, 1 << k2) for _ in range(k2)]
            if rref_basis([BitVector(k2, r) for r in masks], n=k2).k == k2:
                break
        combined = []
        for mask in masks:
            acc = BitVector(n)
            for j in range(k2):
                if mask >> j & 1:
                    acc ^= pair.beta2[j]
            combined.append(acc)
        new_beta2 = tuple(combined)
    order = list(range(K))
    rng.shuffle(order)
    new_ext = []
    for i in order:
        acc = pair.beta1_ext[i]
        for v in pair.beta2:
            if rng.randrange(2):
                acc ^= v
        new_ext.append(acc)
    return NestedCodePair(pair.c1, pair.c2, new_beta2, tuple(new_ext))


def mixing_counterexample():
    """A nested pair plus a GF(2)-mixed realignment whose transversal
    groups differ (the gate with a single order-4 phase on coordinate 5
    is a product for one encoding but not the other)."""
    c1 = rref_basis(
        [BitVector.from_string(s) for s in ("100110", "010100", "001111")], n=6
    )
    c2 = rref_basis([BitVector.from_string("111101")], n=6)
    beta2 = (BitVector.from_string("111101"),)
    ext = (BitVector.from_string("010100"), BitVector.from_string("001111"))
    pair = NestedCodePair(c1, c2, beta2, ext)
    mixed_ext = (ext[1] ^ beta2[0], ext[0] ^ ext[1] ^ beta2[0])
    mixed = NestedCodePair(c1, c2, beta2, mixed_ext)
    return pair, mixed


# ----------------------------------------------------------------- misc

def points(arr) -> set:
    """Rows of an integer array as a set of tuples."""
    return set(map(tuple, np.asarray(arr, dtype=np.int64).tolist()))


def module_perp(mod):
    return kernel_perp(mod.gens, mod.ell, n=mod.n)
