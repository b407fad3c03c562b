import random

import numpy as np
import pytest

from cssgates import (
    BitVector,
    ConsistencyError,
    DiagonalGate,
    Monomial,
    NestedCodePair,
    all_ones_report,
    build_css,
    conjugate_by_yz,
    coset_phase_check,
    css_from_pair,
    decompose_action,
    dot_mod,
    enumerate_group,
    evaluate,
    fixing_group,
    howell_form,
    identity_group,
    logical_phase,
    phase_profile,
    rebase_action,
    rref_basis,
    transversal_group,
)
from cssgates.gates import stabilizer_constraints

from helpers import (
    mixing_counterexample,
    points,
    random_nested_css,
    realign_pair,
)

# frozen module sizes (log2 of the group order) for the two monomial fixtures
MONO16_LENGTHS = {1: (15, 15, 10), 2: (25, 18, 13), 3: (28, 18, 13)}
RM_LENGTHS = {1: (15, 15, 11), 2: (26, 20, 16), 3: (31, 21, 17)}

# frozen controlled-phase decompositions of the three top generators of the
# level-3 fixing group of the sixteen-coordinate fixture
MONO16_FACTORS = {
    "1": [((5,), 4), ((3, 5), 4), ((4, 5), 4), ((3, 4, 5), 4)],
    "x1": [
        ((2,), 4), ((3,), 4), ((4,), 4), ((5,), 4),
        ((2, 3), 4), ((2, 4), 4), ((3, 4), 4), ((3, 5), 4), ((4, 5), 4),
        ((2, 3, 4), 4), ((3, 4, 5), 4),
    ],
    "x2": [
        ((1,), 4), ((3,), 4), ((4,), 4), ((5,), 4),
        ((1, 3), 4), ((1, 4), 4), ((3, 4), 4), ((3, 5), 4), ((4, 5), 4),
        ((1, 3, 4), 4), ((3, 4, 5), 4),
    ],
}


def group_lengths(code, ell):
    return (
        fixing_group(code, ell).length,
        transversal_group(code, ell).length,
        identity_group(code, ell).length,
    )


class TestGroupFixtures:
    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_mono16_lengths(self, mono16_css, ell):
        assert group_lengths(mono16_css, ell) == MONO16_LENGTHS[ell]

    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_rm_lengths(self, rm_css, ell):
        assert group_lengths(rm_css, ell) == RM_LENGTHS[ell]

    def test_pair2_groups(self, pair2_css):
        h2 = fixing_group(pair2_css, 2)
        assert h2 == howell_form([[2, 2]], 2, n=2)
        assert transversal_group(pair2_css, 2) == h2  # one logical qubit
        assert identity_group(pair2_css, 2).length == 0
        h1 = fixing_group(pair2_css, 1)
        assert points(h1.elements()) == {(0, 0), (1, 1)}

    def test_nesting_chain(self, mono16_css):
        for ell in (1, 2, 3):
            h = fixing_group(mono16_css, ell)
            t = transversal_group(mono16_css, ell)
            i = identity_group(mono16_css, ell)
            assert h.contains_module(t)
            assert t.contains_module(i)


class TestStabilizerConstraints:
    def test_pair2_constraint_span(self, pair2_css):
        rows = list(stabilizer_constraints(pair2_css.pair, 2))
        span = howell_form(rows, 2, n=2)
        assert span == howell_form([[1, 1], [2, 0]], 2, n=2)

    def test_mono16_level3_row_shapes(self, mono16_spec, mono16_css):
        rows = list(stabilizer_constraints(mono16_css.pair, 3))
        span = howell_form(rows, 3, n=16)
        assert span.contains(evaluate(4, 0).to_array())
        for u in mono16_spec.outer.monomials():
            assert span.contains(2 * evaluate(4, u).to_array())
        assert span.contains(4 * evaluate(4, 0b0111).to_array())  # x1x2 * x3

    def test_rows_deduplicated(self, pair2_css):
        rows = [r.tobytes() for r in stabilizer_constraints(pair2_css.pair, 2)]
        assert len(rows) == len(set(rows))


class TestRealignment:
    def test_groups_survive_coset_respecting_realignment(self):
        rng = random.Random(401)
        for _ in range(6):
            code = random_nested_css(rng)
            ell = rng.randrange(1, 3)
            h = fixing_group(code.pair, ell)
            t = transversal_group(code.pair, ell)
            i = identity_group(code.pair, ell)
            for _ in range(3):
                moved = realign_pair(code.pair, rng)
                assert fixing_group(moved, ell) == h
                assert transversal_group(moved, ell) == t
                assert identity_group(moved, ell) == i

    def test_extension_pivot_choice_does_not_matter(self, pair2_css):
        """The two-coordinate pair has two natural coset representatives,
        01 and 10 = 01 + 11; they differ by an inner word, so every group
        is identical either way."""
        pair = pair2_css.pair
        alt = NestedCodePair(
            pair.c1, pair.c2, pair.beta2, (BitVector.from_string("10"),)
        )
        for ell in (1, 2):
            assert fixing_group(alt, ell) == fixing_group(pair, ell)
            assert transversal_group(alt, ell) == transversal_group(pair, ell)
            assert identity_group(alt, ell) == identity_group(pair, ell)

    def test_transversal_not_invariant_under_mixing(self):
        """Mixing logical representatives over GF(2) relabels the cosets
        and genuinely changes which gates act as single-qubit products;
        the brute-force oracle agrees with both kernel computations."""
        pair, mixed = mixing_counterexample()
        t_ref = transversal_group(pair, 2)
        t_mix = transversal_group(mixed, 2)
        assert t_ref != t_mix
        probe = np.array([0, 0, 0, 0, 1, 0])
        assert t_ref.contains(probe) and not t_mix.contains(probe)
        oracle_ref = points(enumerate_group(css_from_pair(pair), 2, "transversal"))
        oracle_mix = points(enumerate_group(css_from_pair(mixed), 2, "transversal"))
        assert oracle_ref == points(t_ref.elements())
        assert oracle_mix == points(t_mix.elements())
        assert fixing_group(pair, 2) == fixing_group(mixed, 2)
        assert identity_group(pair, 2) == identity_group(mixed, 2)

    def test_action_transforms_by_shift_and_permutation(self):
        rng = random.Random(402)
        for _ in range(5):
            code = random_nested_css(rng, n_max=5)
            K = code.num_logical
            if K == 0:
                continue
            ell = 2
            t = transversal_group(code.pair, ell)
            moved = realign_pair(code.pair, rng)
            for b in t.gens:
                before = phase_profile(css_from_pair(code.pair), ell, b).phases
                after = phase_profile(css_from_pair(moved), ell, b).phases
                assert sorted(before.tolist()) == sorted(after.tolist())


class TestDecompose:
    def test_mono16_frozen_factors(self, mono16_css):
        h8 = fixing_group(mono16_css, 3)
        for token, expected in MONO16_FACTORS.items():
            b = evaluate(4, Monomial.parse(4, token)).to_array()
            dec = decompose_action(mono16_css, 3, b, group=h8)
            assert [(f.qubits, f.phase) for f in dec.factors] == expected

    def test_rejects_non_fixing_gate(self, pair2_css):
        with pytest.raises(ValueError, match="preserve"):
            decompose_action(pair2_css, 2, [1, 0])

    def test_factor_arity_capped_by_level(self, mono16_css):
        b = evaluate(4, 0).to_array()
        dec = decompose_action(mono16_css, 3, b)
        assert max(len(f.qubits) for f in dec.factors) <= 3

    def test_phase_at_reconstructs_profile(self):
        rng = random.Random(403)
        for _ in range(8):
            code = random_nested_css(rng)
            ell = rng.randrange(1, 4)
            h = fixing_group(code, ell)
            for b in h.gens:
                dec = decompose_action(code, ell, b, group=h)
                prof = phase_profile(code, ell, b, group=h)
                for v in range(1 << code.num_logical):
                    assert dec.phase_at(v) == prof.phases[v]

    def test_phase_at_accepts_bit_sequences(self, pair2_css):
        h = fixing_group(pair2_css, 2)
        dec = decompose_action(pair2_css, 2, [2, 2], group=h)
        assert dec.phase_at([1]) == dec.phase_at(1) == 2


class TestPhases:
    def test_logical_phase_matches_oracle(self):
        rng = random.Random(404)
        for _ in range(6):
            code = random_nested_css(rng)
            ell = rng.randrange(1, 3)
            h = fixing_group(code, ell)
            for b in h.gens:
                res = coset_phase_check(code, ell, b)
                assert res.gate_class.rank >= 1
                for v in range(1 << code.num_logical):
                    assert res.phases[v] == logical_phase(code, ell, b, v)

    def test_profile_flags_non_member(self, pair2_css):
        prof = phase_profile(pair2_css, 2, [1, 0])
        assert not prof.in_fixing_group

    def test_profile_normalizes_global_phase(self, pair2_css):
        y_z = BitVector.from_string("10")
        shifted = build_css(pair2_css.pair.c1, pair2_css.pair.c2, y_z=y_z)
        b = np.array([2, 2])
        prof = phase_profile(shifted, 2, b)
        assert prof.global_phase == dot_mod(b, y_z.to_array(), 2)
        assert prof.phases[0] == 0


class TestShiftedCodes:
    def test_conjugation_is_an_involution(self):
        rng = random.Random(405)
        y = BitVector.from_string("0110")
        for _ in range(10):
            b = [rng.randrange(8) for _ in range(4)]
            moved, scalar = conjugate_by_yz(b, y, 3)
            back, scalar2 = conjugate_by_yz(moved, y, 3)
            assert np.array_equal(back, np.array(b) % 8)
            assert scalar == dot_mod(b, y.to_array(), 3)
            # the round trip accumulates b.y + (-b).y = 0
            assert (scalar + scalar2) % 8 == 0

    def test_membership_transfers_through_conjugation(self, pair2_css):
        y_z = BitVector.from_string("10")
        shifted = build_css(pair2_css.pair.c1, pair2_css.pair.c2, y_z=y_z)
        plain_h = fixing_group(pair2_css, 2)
        shifted_h = fixing_group(shifted, 2)
        for b0 in range(4):
            for b1 in range(4):
                b = np.array([b0, b1])
                moved, _ = conjugate_by_yz(b, y_z, 2)
                assert shifted_h.contains(b) == plain_h.contains(moved)

    def test_shifted_groups_match_oracle(self, pair2_css):
        y_z = BitVector.from_string("10")
        y_x = BitVector.from_string("11")  # inner word: a valid X character
        shifted = build_css(pair2_css.pair.c1, pair2_css.pair.c2, y_x=y_x, y_z=y_z)
        for which, compute in (
            ("fixing", fixing_group),
            ("transversal", transversal_group),
            ("identity", identity_group),
        ):
            assert points(enumerate_group(shifted, 2, which)) == points(
                compute(shifted, 2).elements()
            )


class TestAllOnes:
    def test_steane7_level2(self, steane7_css):
        report = all_ones_report(steane7_css, 2)
        assert report.in_fixing_group
        assert report.in_transversal_group
        assert not report.in_identity_group
        assert report.power_dual_contains_inner
        assert report.weights_condition is True
        assert report.divisibility is False

    def test_steane7_level1_not_divisible(self, steane7_css):
        report = all_ones_report(steane7_css, 1)
        assert report.divisibility is False
        assert not report.in_identity_group

    def test_rm_level3_divisible(self, rm_css):
        report = all_ones_report(rm_css, 3)
        assert report.divisibility is True
        assert report.in_identity_group

    def test_outer_weights(self, steane7_css):
        words = points(
            np.array(
                [
                    sum(
                        (v.to_array() for b, v in zip(range(4), steane7_css.pair.beta1) if mask >> b & 1),
                        start=np.zeros(7, dtype=np.int64),
                    )
                    % 2
                    for mask in range(16)
                ]
            )
        )
        weights = {sum(w) for w in words}
        assert weights == {0, 3, 4, 7}


class TestRebase:
    def test_identity_change(self):
        c = np.array([1, 2, 3])
        out = rebase_action(c, np.eye(3, dtype=np.int64), 2)
        assert np.array_equal(out, c % 4)

    def test_rejects_singular_or_non_binary(self):
        with pytest.raises(ValueError):
            rebase_action([1, 2], np.array([[1, 1], [1, 1]]), 2)
        with pytest.raises(ValueError):
            rebase_action([1, 2], np.array([[2, 0], [0, 1]]), 2)
        with pytest.raises(ValueError):
            rebase_action([1, 2], np.eye(3, dtype=np.int64), 2)


class TestValidation:
    def test_diagonal_gate_bounds(self):
        DiagonalGate(2, (0, 3))
        with pytest.raises(ValueError):
            DiagonalGate(2, (0, 4))
        with pytest.raises(ValueError):
            DiagonalGate(2, ())

    def test_css_character_lengths(self, pair2_css):
        with pytest.raises(ValueError):
            build_css(pair2_css.pair.c1, pair2_css.pair.c2, y_z=BitVector(3))

    def test_zero_logical_pair_has_transversal_equal_fixing(self):
        c = rref_basis([BitVector.from_string("1100"), BitVector.from_string("0011")])
        code = build_css(c, c)
        assert code.num_logical == 0
        for ell in (1, 2):
            assert transversal_group(code, ell) == fixing_group(code, ell)
            assert identity_group(code, ell).contains_module(
                howell_form([], ell, n=4)
            )
