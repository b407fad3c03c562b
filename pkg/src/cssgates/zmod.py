"""Finitely generated submodules of (Z/2^ell)^n in Howell canonical form.

Over Z/2^ell every submodule of Z_N^n has a unique Howell-form generating
matrix: rows in echelon form with strictly increasing pivot columns, each
pivot entry an exact power of two, entries above a pivot reduced modulo it,
and the row span closed in the Howell sense (any span element whose leading
column is at or after pivot j lies in the span of rows j onward; the
annihilator rows inserted during elimination guarantee this). Uniqueness is
what makes module equality a plain matrix comparison.

The module "length" lambda is the sum over pivot entries 2^a of (ell - a);
the module has exactly 2^lambda elements and satisfies
lambda(M) + lambda(M_perp) = n * ell for the dual under the mod-N dot.

Levels are capped at MAX_LEVEL so that a single product of two residues
stays below 2^60 and the mod-before-sum dot products are exact in int64.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "MAX_LEVEL",
    "ZModule",
    "howell_form",
    "kernel_perp",
    "module_length",
    "module_sum",
    "scale_lift",
    "dot_mod",
    "zvector_from_text",
    "zvector_to_text",
]

MAX_LEVEL = 30


def _check_level(ell: int) -> None:
    if not isinstance(ell, (int, np.integer)) or not 1 <= ell <= MAX_LEVEL:
        raise ValueError(f"level must be an integer in [1, {MAX_LEVEL}]")


def _v2(x: int) -> int:
    """2-adic valuation of a nonzero int."""
    return (x & -x).bit_length() - 1


def _as_matrix(rows, ell: int, n: int | None) -> np.ndarray:
    """Validated int64 matrix of residues, reduced mod 2^ell."""
    mat = np.atleast_2d(np.asarray(list(rows), dtype=np.int64))
    if mat.size == 0:
        if n is None:
            raise ValueError("ambient length required for an empty row set")
        return np.zeros((0, n), dtype=np.int64)
    if mat.ndim != 2:
        raise ValueError("rows must be one-dimensional")
    if n is not None and mat.shape[1] != n:
        raise ValueError("declared length disagrees with rows")
    return mat % (1 << ell)


def _howell(mat: np.ndarray, ell: int) -> np.ndarray:
    """Unique Howell-form generator matrix for the row span of mat."""
    N = 1 << ell
    n = mat.shape[1]
    pending = [row.copy() for row in mat if row.any()]
    placed: list[tuple[int, int, np.ndarray]] = []
    for col in range(n):
        touch, keep = [], []
        for r in pending:
            (touch if r[col] else keep).append(r)
        if not touch:
            pending = keep
            continue
        a = min(_v2(int(r[col])) for r in touch)
        idx = next(i for i, r in enumerate(touch) if _v2(int(r[col])) == a)
        piv = touch.pop(idx)
        odd = int(piv[col]) >> a
        if odd != 1:
            # scaling by a unit keeps the span and makes the pivot exactly 2^a
            piv = piv * pow(odd, -1, N) % N
        for r in touch:
            r = (r - (int(r[col]) >> a) * piv) % N
            if r.any():
                keep.append(r)
        if a:
            # annihilator row: the part of the span invisible at this column
            ann = piv << (ell - a) & (N - 1)
            if ann.any():
                keep.append(ann)
        placed.append((col, a, piv))
        pending = keep
    rows = [piv for _, _, piv in placed]
    for i, (col, a, _) in enumerate(placed):
        for j in range(i):
            q = int(rows[j][col]) >> a
            if q:
                rows[j] = (rows[j] - q * rows[i]) % N
    if not rows:
        return np.zeros((0, n), dtype=np.int64)
    return np.vstack(rows)


class ZModule:
    """Submodule of (Z/2^ell)^n, carried by its Howell-form generators.

    Instances are immutable; build them with howell_form or kernel_perp.
    """

    __slots__ = ("n", "ell", "gens", "_pivots")

    def __init__(self, n: int, ell: int, gens: np.ndarray):
        _check_level(ell)
        gens = np.asarray(gens, dtype=np.int64)
        gens.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "ell", int(ell))
        object.__setattr__(self, "gens", gens)
        pivots = []
        for row in gens:
            col = int(np.flatnonzero(row)[0])
            pivots.append((col, _v2(int(row[col]))))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("ZModule is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZModule):
            return NotImplemented
        return (
            self.n == other.n
            and self.ell == other.ell
            and self.gens.shape == other.gens.shape
            and bool(np.array_equal(self.gens, other.gens))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.ell, self.gens.tobytes()))

    def __repr__(self) -> str:
        return f"ZModule(n={self.n}, ell={self.ell}, rank={len(self.gens)}, length={self.length})"

    @property
    def modulus(self) -> int:
        return 1 << self.ell

    @property
    def length(self) -> int:
        """log2 of the number of elements."""
        return sum(self.ell - a for _, a in self._pivots)

    def contains(self, v) -> bool:
        N = self.modulus
        vec = np.asarray(v, dtype=np.int64) % N
        if vec.shape != (self.n,):
            raise ValueError("vector length mismatch")
        vec = vec.copy()
        for (col, a), row in zip(self._pivots, self.gens):
            q = int(vec[col]) >> a
            if q:
                vec = (vec - q * row) % N
        return not vec.any()

    def contains_module(self, other: "ZModule") -> bool:
        if (other.n, other.ell) != (self.n, self.ell):
            raise ValueError("modules live in different ambient spaces")
        return all(self.contains(row) for row in other.gens)

    def elements(self, limit: int = 1 << 22) -> np.ndarray:
        """All 2^length elements, one per row, deterministic order.

        Rows are generated by odometer over the canonical coefficient
        ranges [0, 2^(ell - a_j)), last generator fastest.
        """
        N = self.modulus
        counts = [1 << (self.ell - a) for _, a in self._pivots]
        total = 1
        for c in counts:
            total *= c
        if total > limit:
            raise ValueError(f"module has {total} elements, above the limit {limit}")
        out = np.zeros((total, self.n), dtype=np.int64)
        if not counts:
            return out
        reps = total
        for (count, row) in zip(counts, self.gens):
            reps //= count
            coeff = np.tile(np.repeat(np.arange(count, dtype=np.int64), reps), total // (count * reps))
            out = (out + coeff[:, None] * row) % N
        return out


def howell_form(rows, ell: int, *, n: int | None = None) -> ZModule:
    """Canonicalize a generating set. Idempotent and order-independent."""
    _check_level(ell)
    mat = _as_matrix(rows, ell, n)
    return ZModule(mat.shape[1], ell, _howell(mat, ell))


def module_length(mod: ZModule) -> int:
    return mod.length


def module_sum(a: ZModule, b: ZModule) -> ZModule:
    if (a.n, a.ell) != (b.n, b.ell):
        raise ValueError("modules live in different ambient spaces")
    stacked = np.vstack([a.gens, b.gens]) if len(a.gens) or len(b.gens) else np.zeros((0, a.n), dtype=np.int64)
    return ZModule(a.n, a.ell, _howell(stacked, a.ell))


def scale_lift(mod: ZModule, to_ell: int) -> ZModule:
    """The module 2M inside (Z/2^(ell+1))^n.

    Doubling a Howell-form matrix is again Howell form one level up (every
    pivot and every reduction bound doubles), so no reduction is needed and
    the length is preserved.
    """
    _check_level(to_ell)
    if to_ell != mod.ell + 1:
        raise ValueError("lift goes up exactly one level")
    return ZModule(mod.n, to_ell, (mod.gens.copy() << 1))


def dot_mod(u, v, ell: int) -> int:
    """Exact dot product of residue vectors mod 2^ell.

    Products are reduced before summing, so int64 never overflows for any
    level up to MAX_LEVEL and any practical n.
    """
    _check_level(ell)
    N = 1 << ell
    a = np.asarray(u, dtype=np.int64)
    b = np.asarray(v, dtype=np.int64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("vectors must share one dimension")
    return int((a * b % N).sum() % N)


def _residual(cons: np.ndarray, gens: np.ndarray, N: int) -> np.ndarray:
    """Matrix of dot products gens . cons_row mod N, shape (rows, gens)."""
    if len(gens) == 0 or len(cons) == 0:
        return np.zeros((len(cons), len(gens)), dtype=np.int64)
    return (cons[:, None, :] * gens[None, :, :] % N).sum(axis=2) % N


def kernel_perp(rows, ell: int, *, n: int | None = None, chunk: int = 256) -> ZModule:
    """All b with b . r = 0 mod 2^ell for every constraint row r.

    Constraints are consumed as a stream: the solution module starts as the
    full space and is intersected with one hyperplane kernel at a time.
    For a constraint r with generator residuals d_i = g_i . r, writing
    a = min valuation of the nonzero d_i and picking a witness row p with
    valuation a, the rows g_i - (d_i >> a) * inv * g_p (i != p) together
    with 2^(ell-a) * g_p generate exactly the solutions inside the current
    span. Each effective constraint strictly drops the module length, so at
    most n*ell reductions happen regardless of how many rows arrive.
    """
    _check_level(ell)
    N = 1 << ell
    iterator = iter(rows)
    first: np.ndarray | None = None
    if n is None:
        try:
            first = np.asarray(next(iterator), dtype=np.int64)
        except StopIteration:
            raise ValueError("ambient length required for an empty constraint stream")
        n = first.shape[0]
    gens = np.eye(n, dtype=np.int64)

    def feed() -> Iterator[np.ndarray]:
        if first is not None:
            yield first
        yield from iterator

    batch: list[np.ndarray] = []
    for raw in feed():
        row = np.asarray(raw, dtype=np.int64) % N
        if row.shape != (n,):
            raise ValueError("constraint row length mismatch")
        batch.append(row)
        if len(batch) >= chunk:
            gens = _consume(np.vstack(batch), gens, ell)
            batch = []
    if batch:
        gens = _consume(np.vstack(batch), gens, ell)
    return ZModule(n, ell, gens)


def _consume(cons: np.ndarray, gens: np.ndarray, ell: int) -> np.ndarray:
    N = 1 << ell
    while len(cons):
        if len(gens) == 0:
            break
        res = _residual(cons, gens, N)
        alive = res.any(axis=1)
        cons = cons[alive]
        res = res[alive]
        if not len(cons):
            break
        d = res[0]
        nz = [int(x) for x in d if x]
        a = min(_v2(x) for x in nz)
        p = next(i for i, x in enumerate(d) if x and _v2(int(x)) == a)
        inv = pow(int(d[p]) >> a, -1, N)
        coef = (d >> a) * inv % N
        new_rows = (gens - coef[:, None] * gens[p]) % N
        new_rows[p] = gens[p] << (ell - a) & (N - 1)
        gens = _howell(new_rows, ell)
        cons = cons[1:]
    return gens


def zvector_to_text(v) -> str:
    """Comma-separated decimal residues, e.g. '0,2,1'."""
    arr = np.asarray(v, dtype=np.int64)
    return ",".join(str(int(x)) for x in arr)


def zvector_from_text(text: str, ell: int) -> np.ndarray:
    _check_level(ell)
    N = 1 << ell
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty residue vector")
    out = np.zeros(len(parts), dtype=np.int64)
    for i, part in enumerate(parts):
        try:
            value = int(part.strip(), 10)
        except ValueError:
            raise ValueError(f"not a decimal residue at position {i + 1}: {part!r}")
        if not 0 <= value < N:
            raise ValueError(f"residue out of range at position {i + 1}: {value}")
        out[i] = value
    return out
