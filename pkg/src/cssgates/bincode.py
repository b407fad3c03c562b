"""Bit-packed GF(2) linear algebra: vectors, codes, duals, star products.

Vectors are stored as python ints (coordinate 1 = least significant bit),
which keeps row reduction allocation-free and makes componentwise products
plain integer ANDs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BitVector",
    "BinaryCode",
    "NestedCodePair",
    "rref_basis",
    "dual_basis",
    "star",
    "star_family",
    "schur_power",
    "aligned_bases",
]


@dataclass(frozen=True, order=True)
class BitVector:
    """Length-n vector over GF(2) packed into an int.

    Coordinate 1 is the least significant bit and the leftmost character of
    the text form, so ``from_string("110")`` has coordinates (1, 1, 0).
    """

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        # plain ints only: numpy integers would overflow at 64 coordinates
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "bits", int(self.bits))
        if self.n <= 0:
            raise ValueError("BitVector length must be positive")
        if not 0 <= self.bits < 1 << self.n:
            raise ValueError(f"bit pattern does not fit in {self.n} coordinates")

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    @classmethod
    def from_ints(cls, values: Sequence[int]) -> "BitVector":
        bits = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError("coordinates must be 0 or 1")
            bits |= int(v) << i
        return cls(len(values), bits)

    @classmethod
    def all_ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def to_array(self) -> np.ndarray:
        """The 0/1 entries as int64, i.e. the set-map lift used for Z_N dots."""
        out = np.zeros(self.n, dtype=np.int64)
        bits = self.bits
        while bits:
            low = bits & -bits
            out[low.bit_length() - 1] = 1
            bits ^= low
        return out

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def pivot(self) -> int | None:
        """0-based index of the first nonzero coordinate, None if zero."""
        if self.bits == 0:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return self.bits >> i & 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits & other.bits)

    def __str__(self) -> str:
        return self.to_string()


def star(u: BitVector, v: BitVector) -> BitVector:
    """Componentwise product. Commutative, associative, star(u, u) = u."""
    return u & v


def _rref(masks: Iterable[int]) -> list[int]:
    """Reduced row echelon form of int-packed rows, pivots ascending."""
    pivots: dict[int, int] = {}
    for m in masks:
        while m:
            low = m & -m
            if low in pivots:
                m ^= pivots[low]
            else:
                pivots[low] = m
                break
    for low in sorted(pivots, reverse=True):
        row = pivots[low]
        for other_low in pivots:
            if other_low != low and pivots[other_low] & low:
                pivots[other_low] ^= row
    return [pivots[low] for low in sorted(pivots)]


def _reduce_mod(bits: int, rows: Sequence[int]) -> int:
    """Remainder of bits after elimination against echelon rows."""
    for row in rows:
        low = row & -row
        if bits & low:
            bits ^= row
    return bits


@dataclass(frozen=True)
class BinaryCode:
    """A linear code held by its reduced row echelon basis.

    The RREF basis with strictly increasing pivots is unique, so code
    equality is plain dataclass equality. Construct through rref_basis
    unless the rows are already canonical.
    """

    n: int
    basis: tuple[BitVector, ...] = ()

    def __post_init__(self) -> None:
        masks = []
        for row in self.basis:
            if row.n != self.n:
                raise ValueError("basis row length differs from code length")
            masks.append(row.bits)
        if _rref(masks) != masks:
            raise ValueError("basis rows are not in reduced echelon form")

    @property
    def k(self) -> int:
        return len(self.basis)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError("length mismatch")
        return _reduce_mod(v.bits, [row.bits for row in self.basis]) == 0

    def codeword(self, coeff_mask: int) -> BitVector:
        """The combination of basis rows selected by coeff_mask bits."""
        bits = 0
        for i, row in enumerate(self.basis):
            if coeff_mask >> i & 1:
                bits ^= row.bits
        return BitVector(self.n, bits)


def rref_basis(rows: Sequence[BitVector], *, n: int | None = None) -> BinaryCode:
    """Span of the rows as a canonical BinaryCode.

    Idempotent: applying it to a code's basis returns an equal code. The
    ambient length is taken from the rows, or from n for an empty list.
    """
    if rows:
        length = rows[0].n
        if n is not None and n != length:
            raise ValueError("declared length disagrees with rows")
    elif n is None:
        raise ValueError("ambient length required for an empty generating set")
    else:
        length = n
    masks = []
    for row in rows:
        if row.n != length:
            raise ValueError("rows of mixed lengths")
        masks.append(row.bits)
    return BinaryCode(length, tuple(BitVector(length, m) for m in _rref(masks)))


def dual_basis(code: BinaryCode) -> BinaryCode:
    """The dual code, dimension n - k. Applying twice returns the input."""
    pivot_rows = {row.pivot: row.bits for row in code.basis}
    gens = []
    for f in range(code.n):
        if f in pivot_rows:
            continue
        bits = 1 << f
        for p, row in pivot_rows.items():
            if row >> f & 1:
                bits |= 1 << p
        gens.append(BitVector(code.n, bits))
    return rref_basis(gens, n=code.n)


def star_family(
    basis: Sequence[BitVector], r: int, *, n: int | None = None
) -> tuple[BitVector, ...]:
    """Products of r distinct elements of basis, deduplicated.

    r = 0 yields the all-ones vector; r beyond the family size yields
    nothing. Output order follows lexicographic index subsets with first
    occurrences kept, so it is deterministic for a fixed input order.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n is None:
        if not basis:
            raise ValueError("ambient length required for an empty family")
        n = basis[0].n
    if r == 0:
        return (BitVector.all_ones(n),)
    if r > len(basis):
        return ()
    full = (1 << n) - 1
    seen: dict[int, None] = {}
    for combo in combinations(range(len(basis)), r):
        bits = full
        for i in combo:
            bits &= basis[i].bits
        seen.setdefault(bits, None)
    return tuple(BitVector(n, b) for b in seen)


def schur_power(code: BinaryCode, r: int) -> BinaryCode:
    """Span of all r-fold componentwise products of codewords.

    Star products distribute over XOR coordinatewise, so products of basis
    elements generate the span; repetition collapses (v star v = v), which
    reduces the generating set to products of between 1 and r distinct
    basis rows.
    """
    if r < 1:
        raise ValueError("power must be at least 1")
    gens: list[BitVector] = []
    for s in range(1, min(r, code.k) + 1):
        gens.extend(star_family(code.basis, s, n=code.n))
    return rref_basis(gens, n=code.n)


@dataclass(frozen=True)
class NestedCodePair:
    """Nested codes C2 within C1 with a shared aligned basis.

    beta2 is an ordered basis of C2 and beta1_ext extends it to a basis of
    C1; the K = k1 - k2 extension rows are the logical coset
    representatives, in order. Rows need not be in echelon form (the
    monomial constructions carry evaluation vectors verbatim), only
    independent and spanning.
    """

    c1: BinaryCode
    c2: BinaryCode
    beta2: tuple[BitVector, ...]
    beta1_ext: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        n = self.c1.n
        if self.c2.n != n:
            raise ValueError("code lengths differ")
        for row in (*self.beta2, *self.beta1_ext):
            if row.n != n:
                raise ValueError("basis row length differs from code length")
        if rref_basis(self.beta2, n=n) != self.c2:
            raise ValueError("beta2 does not span the inner code")
        if rref_basis(self.beta2 + self.beta1_ext, n=n) != self.c1:
            raise ValueError("beta2 and beta1_ext do not span the outer code")
        if len(self.beta2) != self.c2.k or len(self.beta1_ext) != self.c1.k - self.c2.k:
            raise ValueError("basis rows are not independent")

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def num_logical(self) -> int:
        return len(self.beta1_ext)

    @property
    def beta1(self) -> tuple[BitVector, ...]:
        return self.beta2 + self.beta1_ext


def aligned_bases(c1: BinaryCode, c2: BinaryCode) -> NestedCodePair:
    """Deterministic aligned bases for a nested pair.

    beta2 is the RREF basis of C2; the extension is obtained by reducing
    C1's basis rows modulo beta2 and row-reducing the nonzero remainders,
    so its rows come out sorted by pivot. Raises if C2 is not inside C1.
    """
    if c1.n != c2.n:
        raise ValueError("code lengths differ")
    for row in c2.basis:
        if not c1.contains(row):
            raise ValueError("inner code is not contained in the outer code")
    inner = [row.bits for row in c2.basis]
    remainders = []
    for row in c1.basis:
        bits = _reduce_mod(row.bits, inner)
        if bits:
            remainders.append(BitVector(c1.n, bits))
    ext = rref_basis(remainders, n=c1.n)
    return NestedCodePair(c1, c2, c2.basis, ext.basis)
