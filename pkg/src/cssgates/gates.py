"""Diagonal-gate groups of a CSS code over Z/2^ell and their logical action.

A CSS code here is a nested pair (C2 inside C1) plus two sign characters
y_x, y_z. The physical gates considered are U(b) = prod_i diag(1, w^{b_i})
with w = exp(2 pi i / 2^ell). Three nested groups of exponent vectors b are
computed, each as the kernel of an explicit constraint stream:

* fixing_group: U(b) preserves the code space (phases constant on each
  coset of C2 inside C1);
* transversal_group: U(b) additionally acts on the logical qubits as a
  tensor product of single-qubit diagonal factors;
* identity_group: U(b) acts as the exact identity on the code space.

Group computations operate on the zero-character code; conjugate_by_yz
transfers memberships and actions to nonzero y_z.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .bincode import (
    BinaryCode,
    BitVector,
    NestedCodePair,
    aligned_bases,
    dual_basis,
    rref_basis,
    schur_power,
    star_family,
)
from .zmod import ZModule, dot_mod, howell_form, kernel_perp, module_sum, scale_lift

__all__ = [
    "ConsistencyError",
    "CssCode",
    "DiagonalGate",
    "PhaseProfile",
    "ControlledFactor",
    "LogicalDecomposition",
    "AllOnesReport",
    "build_css",
    "css_from_pair",
    "stabilizer_constraints",
    "fixing_group",
    "transversal_group",
    "identity_group",
    "logical_phase",
    "phase_profile",
    "decompose_action",
    "conjugate_by_yz",
    "rebase_action",
    "all_ones_report",
]


class ConsistencyError(RuntimeError):
    """Two formulations that must agree produced different results."""


@dataclass(frozen=True)
class CssCode:
    """Nested pair plus the X/Z sign characters."""

    pair: NestedCodePair
    y_x: BitVector
    y_z: BitVector

    def __post_init__(self) -> None:
        if self.y_x.n != self.pair.n or self.y_z.n != self.pair.n:
            raise ValueError("character length differs from code length")

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def num_logical(self) -> int:
        return self.pair.num_logical


@dataclass(frozen=True)
class DiagonalGate:
    """Exponent vector of a transversal diagonal gate at a given level."""

    ell: int
    phases: tuple[int, ...]

    def __post_init__(self) -> None:
        N = 1 << self.ell
        object.__setattr__(self, "phases", tuple(int(p) for p in self.phases))
        if not self.phases:
            raise ValueError("gate must act on at least one qubit")
        if any(not 0 <= p < N for p in self.phases):
            raise ValueError("phase exponents out of range for the level")

    def as_array(self) -> np.ndarray:
        return np.array(self.phases, dtype=np.int64)


def build_css(
    c1: BinaryCode,
    c2: BinaryCode,
    y_x: BitVector | None = None,
    y_z: BitVector | None = None,
) -> CssCode:
    """CSS code from nested binary codes, with deterministic aligned bases."""
    pair = aligned_bases(c1, c2)
    return css_from_pair(pair, y_x, y_z)


def css_from_pair(
    pair: NestedCodePair,
    y_x: BitVector | None = None,
    y_z: BitVector | None = None,
) -> CssCode:
    n = pair.n
    if y_x is None:
        y_x = BitVector(n)
    if y_z is None:
        y_z = BitVector(n)
    return CssCode(pair, y_x, y_z)


def _pair_of(code) -> NestedCodePair:
    return code.pair if isinstance(code, CssCode) else code


def stabilizer_constraints(pair: NestedCodePair, ell: int) -> Iterator[np.ndarray]:
    """Constraint rows whose mod-2^ell kernel is the fixing group.

    Yields 2^i * lift(v * p) for every inner basis vector v and every
    product p of i distinct outer basis vectors, i < ell, deduplicated,
    in deterministic order.
    """
    pair = _pair_of(pair)
    beta1 = pair.beta1
    seen: set[bytes] = set()
    for i in range(ell):
        for p in star_family(beta1, i, n=pair.n):
            for v in pair.beta2:
                row = (v & p).to_array() << i
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    yield row


def _distinct_product_rows(
    pair: NestedCodePair, ell: int, sizes: Iterable[int], need_outside: bool
) -> Iterator[np.ndarray]:
    """Rows 2^(j-1) * lift of products of j distinct outer basis vectors.

    With need_outside, only products involving at least one extension
    vector are emitted (the inner-only ones are already consequences of
    the fixing constraints).
    """
    beta1 = pair.beta1
    k2 = len(pair.beta2)
    seen: set[bytes] = set()
    for j in sizes:
        if j > len(beta1):
            continue
        for combo in combinations(range(len(beta1)), j):
            if need_outside and combo[-1] < k2:
                continue
            vec = beta1[combo[0]]
            for idx in combo[1:]:
                vec = vec & beta1[idx]
            row = vec.to_array() << (j - 1)
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                yield row


def _flip_vector(code) -> np.ndarray | None:
    """Sign pattern 1 - 2*y_z when the code carries a nonzero Z shift."""
    if isinstance(code, CssCode) and code.y_z.bits:
        return 1 - 2 * code.y_z.to_array()
    return None


def _conjugated(rows: Iterable[np.ndarray], flip: np.ndarray | None, ell: int):
    """Constraint rows conjugated by the Z shift.

    A gate relates to the shifted code exactly as its coordinate-flipped
    partner relates to the unshifted one, and flipping is self-adjoint, so
    kernels for shifted codes are kernels of flipped constraint rows.
    """
    if flip is None:
        yield from rows
        return
    N = 1 << ell
    for row in rows:
        yield row * flip % N


def fixing_group(code, ell: int) -> ZModule:
    """Exponent vectors whose gate preserves the code space."""
    pair = _pair_of(code)
    rows = _conjugated(stabilizer_constraints(pair, ell), _flip_vector(code), ell)
    return kernel_perp(rows, ell, n=pair.n)


def _transversal_rows_direct(pair: NestedCodePair, ell: int) -> Iterator[np.ndarray]:
    # inner basis at scale 1, then all distinct products of j >= 2 outer
    # basis vectors at scale 2^(j-1)
    for v in pair.beta2:
        yield v.to_array()
    yield from _distinct_product_rows(pair, ell, range(2, ell + 1), need_outside=False)


def _transversal_rows_refined(pair: NestedCodePair, ell: int) -> Iterator[np.ndarray]:
    # fixing constraints, plus the products of j >= 2 distinct outer basis
    # vectors that reach outside the inner basis
    yield from stabilizer_constraints(pair, ell)
    yield from _distinct_product_rows(pair, ell, range(2, ell + 1), need_outside=True)


def transversal_group(code, ell: int) -> ZModule:
    """Exponent vectors acting as a tensor product on the logical qubits.

    Computed twice from independently derived constraint systems; a
    disagreement raises ConsistencyError. With no logical qubits every
    code-preserving gate qualifies.
    """
    pair = _pair_of(code)
    if pair.num_logical == 0:
        return fixing_group(code, ell)
    direct = kernel_perp(_transversal_rows_direct(pair, ell), ell, n=pair.n)
    refined = kernel_perp(_transversal_rows_refined(pair, ell), ell, n=pair.n)
    if direct != refined:
        raise ConsistencyError(
            "transversal group: the two constraint systems disagree "
            f"(lengths {direct.length} vs {refined.length})"
        )
    flip = _flip_vector(code)
    if flip is None:
        return direct
    rows = _conjugated(_transversal_rows_direct(pair, ell), flip, ell)
    return kernel_perp(rows, ell, n=pair.n)


def identity_group(code, ell: int) -> ZModule:
    """Exponent vectors acting as the exact identity on the code space.

    For unshifted codes this depends only on the outer code; a nonzero Z
    shift additionally forces a zero phase on the shift itself. Also
    computed along two routes, the second refining the transversal
    constraints by the extension vectors.
    """
    pair = _pair_of(code)
    direct = kernel_perp(
        _distinct_product_rows(pair, ell, range(1, ell + 1), need_outside=False),
        ell,
        n=pair.n,
    )

    def refined_rows() -> Iterator[np.ndarray]:
        yield from _transversal_rows_refined(pair, ell)
        for w in pair.beta1_ext:
            yield w.to_array()

    refined = kernel_perp(refined_rows(), ell, n=pair.n)
    if direct != refined:
        raise ConsistencyError(
            "identity group: the two constraint systems disagree "
            f"(lengths {direct.length} vs {refined.length})"
        )
    flip = _flip_vector(code)
    if flip is None:
        return direct

    def shifted_rows() -> Iterator[np.ndarray]:
        yield from _conjugated(
            _distinct_product_rows(pair, ell, range(1, ell + 1), need_outside=False),
            flip,
            ell,
        )
        yield code.y_z.to_array()

    return kernel_perp(shifted_rows(), ell, n=pair.n)


def _as_bitmask(v, num_logical: int) -> int:
    if isinstance(v, (int, np.integer)):
        mask = int(v)
    else:
        mask = 0
        for i, bit in enumerate(v):
            if bit not in (0, 1):
                raise ValueError("logical index bits must be 0 or 1")
            mask |= bit << i
    if not 0 <= mask < 1 << num_logical:
        raise ValueError("logical index out of range")
    return mask


def _coset_rep(code: CssCode, mask: int) -> BitVector:
    rep = code.y_z
    for i, w in enumerate(code.pair.beta1_ext):
        if mask >> i & 1:
            rep = rep ^ w
    return rep


def logical_phase(code: CssCode, ell: int, b, v) -> int:
    """Phase exponent picked up by logical basis state v under U(b).

    v may be an int bitmask or a sequence of K bits (bit i selects the
    i-th extension vector). The value is the raw exponent of the coset
    labelled v, including any contribution of y_z.
    """
    mask = _as_bitmask(v, code.num_logical)
    arr = np.asarray(b, dtype=np.int64)
    return dot_mod(arr, _coset_rep(code, mask).to_array(), ell)


def _label_matrix(code: CssCode, ell: int) -> np.ndarray:
    """Row v = lift of (y_z xor sum of chosen extension vectors)."""
    K = code.num_logical
    rows = np.zeros((1 << K, code.n), dtype=np.int64)
    rows[0] = code.y_z.to_array()
    for i, w in enumerate(code.pair.beta1_ext):
        bit = 1 << i
        rows[bit : 2 * bit] = rows[:bit] ^ w.to_array()
    return rows


@dataclass(frozen=True)
class PhaseProfile:
    """Logical phase function of a code-preserving diagonal gate.

    phases[v] is the exponent of coset v relative to coset 0; the raw
    exponent of coset 0 itself is kept as global_phase. in_fixing_group
    records whether the profile is actually well defined.
    """

    ell: int
    num_logical: int
    phases: np.ndarray
    global_phase: int
    in_fixing_group: bool


def phase_profile(code: CssCode, ell: int, b, *, group: ZModule | None = None) -> PhaseProfile:
    K = code.num_logical
    if K > 20:
        raise ValueError("profile table limited to 20 logical qubits")
    N = 1 << ell
    arr = np.asarray(b, dtype=np.int64) % N
    if group is None:
        group = fixing_group(code, ell)
    labels = _label_matrix(code, ell)
    phases = labels @ arr % N
    global_phase = int(phases[0])
    return PhaseProfile(
        ell=ell,
        num_logical=K,
        phases=(phases - global_phase) % N,
        global_phase=global_phase,
        in_fixing_group=group.contains(arr),
    )


@dataclass(frozen=True)
class ControlledFactor:
    """One multiply-controlled phase factor: qubits are 1-based, sorted."""

    qubits: tuple[int, ...]
    phase: int


@dataclass(frozen=True)
class LogicalDecomposition:
    """Logical action as a product of multiply-controlled phase gates.

    Factors are ordered by (arity, qubit tuple) and carry only nonzero
    phases. phase_at reconstructs the profile of any basis state.
    """

    ell: int
    num_logical: int
    factors: tuple[ControlledFactor, ...]

    def phase_at(self, v) -> int:
        mask = _as_bitmask(v, self.num_logical)
        N = 1 << self.ell
        total = 0
        for factor in self.factors:
            if all(mask >> (q - 1) & 1 for q in factor.qubits):
                total += factor.phase
        return total % N


def decompose_action(
    code: CssCode, ell: int, b, *, group: ZModule | None = None
) -> LogicalDecomposition:
    """Controlled-phase decomposition of the logical action of U(b).

    The coefficient on the factor controlled by J is
    (-2)^(|J|-1) * (b . lift of the product of the chosen extension
    vectors), so subsets larger than the level contribute nothing and are
    skipped. On a code with a nonzero Z shift the coordinate-flipped
    vector is decomposed instead, which reproduces the phases relative to
    coset 0 exactly as for unshifted codes. Requires b in the fixing
    group.
    """
    K = code.num_logical
    N = 1 << ell
    arr = np.asarray(b, dtype=np.int64) % N
    if group is None:
        group = fixing_group(code, ell)
    if not group.contains(arr):
        raise ValueError("gate does not preserve the code space")
    flip = _flip_vector(code)
    eff = arr if flip is None else arr * flip % N
    ext = code.pair.beta1_ext
    factors = []
    for h in range(1, min(K, ell) + 1):
        unit = pow(-2, h - 1, N)
        for combo in combinations(range(K), h):
            vec = ext[combo[0]]
            for idx in combo[1:]:
                vec = vec & ext[idx]
            a = unit * dot_mod(eff, vec.to_array(), ell) % N
            if a:
                factors.append(ControlledFactor(tuple(q + 1 for q in combo), a))
    factors.sort(key=lambda f: (len(f.qubits), f.qubits))
    return LogicalDecomposition(ell=ell, num_logical=K, factors=tuple(factors))


def conjugate_by_yz(b, y_z: BitVector, ell: int) -> tuple[np.ndarray, int]:
    """Exponent vector and global phase after conjugating by X(y_z).

    Negates the entries selected by y_z; the scalar picked up is
    b . lift(y_z). Applying the map twice returns the input.
    """
    N = 1 << ell
    arr = np.asarray(b, dtype=np.int64) % N
    if arr.shape != (y_z.n,):
        raise ValueError("vector length mismatch")
    flip = y_z.to_array()
    moved = (arr * (1 - 2 * flip)) % N
    return moved, dot_mod(arr, flip, ell)


def rebase_action(c, basis_change: np.ndarray, ell: int) -> np.ndarray:
    """Transversal phase vector after a logical basis change.

    basis_change is a 0/1 matrix M, invertible over GF(2), whose column j
    expresses the new j-th representative in terms of the old ones. The
    new phase vector is c M over Z_2^ell.
    """
    N = 1 << ell
    vec = np.asarray(c, dtype=np.int64) % N
    M = np.asarray(basis_change, dtype=np.int64)
    K = vec.shape[0]
    if M.shape != (K, K):
        raise ValueError("basis change must be square of matching size")
    if np.any((M != 0) & (M != 1)):
        raise ValueError("basis change entries must be 0 or 1")
    row_masks = [BitVector.from_ints(list(row)) for row in M]
    if rref_basis(row_masks, n=K).k != K:
        raise ValueError("basis change is singular over GF(2)")
    return vec @ M % N


@dataclass(frozen=True)
class AllOnesReport:
    """Where the uniform gate U(1,...,1) sits, with corollary checks.

    weights_condition and divisibility are None when the enumeration cap
    (outer dimension 24) leaves them unchecked.
    """

    ell: int
    in_fixing_group: bool
    in_transversal_group: bool
    in_identity_group: bool
    power_dual_contains_inner: bool
    weights_condition: bool | None
    divisibility: bool | None


_SCAN_CAP = 24


def _weight_scan(pair: NestedCodePair, ell: int) -> tuple[bool, bool]:
    """(all outer weights divisible by 2^ell, coset weight rule holds).

    The coset rule asks that every word of coset v weigh the v-weighted
    sum of the extension weights mod 2^ell. Enumerates the outer code by
    coefficient blocks.
    """
    N = 1 << ell
    k2 = len(pair.beta2)
    K = pair.num_logical
    k1 = k2 + K
    rows01 = np.zeros((max(k1, 1), pair.n), dtype=np.uint8)
    for i, v in enumerate(pair.beta1):
        rows01[i] = v.to_array()
    ext_weights = np.array([w.weight for w in pair.beta1_ext], dtype=np.int64)
    divisible = True
    coset_rule = True
    total = 1 << k1
    step = min(total, 1 << 16)
    shifts = np.arange(k1, dtype=np.uint32)
    for start in range(0, total, step):
        idx = np.arange(start, min(start + step, total), dtype=np.uint32)
        coeffs = (idx[:, None] >> shifts) & 1
        words = coeffs.astype(np.uint8) @ rows01[:k1] & 1
        weights = words.sum(axis=1, dtype=np.int64)
        if weights.size and (weights % N).any():
            divisible = False
        expected = coeffs[:, k2:].astype(np.int64) @ ext_weights % N if K else np.zeros(len(idx), dtype=np.int64)
        if ((weights - expected) % N).any():
            coset_rule = False
        if not divisible and not coset_rule:
            break
    return divisible, coset_rule


def all_ones_report(
    code, ell: int, *, groups: tuple[ZModule, ZModule, ZModule] | None = None
) -> AllOnesReport:
    """Classify the uniform gate and cross-check the weight corollaries.

    The weight corollaries are statements about the underlying nested
    pair, so any X/Z characters are ignored; groups, when passed, must be
    the pair-level groups. Raises ConsistencyError if a computed
    membership contradicts the corresponding weight scan, or if
    membership in the fixing group does not force the inner code into the
    dual of the (ell-1)-th power of the outer code.
    """
    pair = _pair_of(code)
    if groups is None:
        groups = (
            fixing_group(pair, ell),
            transversal_group(pair, ell),
            identity_group(pair, ell),
        )
    fixing, transversal, identity = groups
    ones = np.ones(pair.n, dtype=np.int64)
    in_h = fixing.contains(ones)
    in_t = transversal.contains(ones)
    in_id = identity.contains(ones)

    if ell == 1:
        power = rref_basis([BitVector.all_ones(pair.n)], n=pair.n)
    else:
        power = schur_power(pair.c1, ell - 1)
    perp = dual_basis(power)
    containment_ok = all(perp.contains(v) for v in pair.beta2)
    if in_h and not containment_ok:
        raise ConsistencyError("uniform gate fixes the code but the power-dual containment fails")

    k1 = pair.c1.k
    if k1 <= _SCAN_CAP:
        divisible, coset_rule = _weight_scan(pair, ell)
        if divisible != in_id:
            raise ConsistencyError("identity membership disagrees with the divisibility scan")
        if coset_rule != in_t:
            raise ConsistencyError("transversal membership disagrees with the coset weight rule")
    else:
        divisible, coset_rule = None, None

    return AllOnesReport(
        ell=ell,
        in_fixing_group=in_h,
        in_transversal_group=in_t,
        in_identity_group=in_id,
        power_dual_contains_inner=containment_ok,
        weights_condition=coset_rule,
        divisibility=divisible,
    )
