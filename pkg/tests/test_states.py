import numpy as np
import pytest

from tlbraid import (CapacityError, DimensionMismatchError, DomainError,
                     RepShape, apply_structured, basis_state, bits_to_index,
                     cluster_family, cluster_like_state, conjugate_bits,
                     ghz_state, index_to_bits, jones_representation, max_abs,
                     norm, parse_bits, phase_equivalent, structured_braid_op,
                     tl_params)
from tlbraid import _kernels
from tlbraid.tla import default_involution_spec, involution_spec

from conftest import random_state

S2 = 1.0 / np.sqrt(2.0)


def dense_b1b2(theta, phi, n, k, names=None):
    """Dense oracle: the product of the Jones generators."""
    p = tl_params(theta, phi)
    shape = RepShape(n, k)
    spec = (default_involution_spec(shape) if names is None
            else involution_spec(names))
    rep = jones_representation(p, shape, spec)
    return rep.generators[0] @ rep.generators[1]


class TestBits:
    def test_basis_state_00(self):
        assert np.array_equal(basis_state("00"), [1, 0, 0, 0])

    def test_basis_state_10_msb_first(self):
        assert np.array_equal(basis_state("10"), [0, 0, 1, 0])

    def test_basis_state_111(self):
        assert bits_to_index("111") == 7
        assert basis_state("111")[7] == 1.0

    def test_conjugate(self):
        assert conjugate_bits("00") == (1, 1)
        assert conjugate_bits("001") == (1, 1, 0)

    def test_conjugate_is_involution(self, rng):
        for _ in range(20):
            bits = tuple(rng.integers(0, 2, size=rng.integers(1, 9)))
            assert conjugate_bits(conjugate_bits(bits)) == bits

    def test_index_roundtrip(self):
        for n in (1, 3, 5):
            for idx in range(1 << n):
                assert bits_to_index(index_to_bits(idx, n)) == idx

    def test_bad_bits(self):
        with pytest.raises(DomainError):
            parse_bits("0120")
        with pytest.raises(DomainError):
            parse_bits("")


class TestStructuredBlocks:
    def test_pi_8_matrix_elements(self):
        op = structured_braid_op(RepShape(3, 1))
        d = op.diag_block
        f = op.offdiag_block
        assert abs(d[0, 0] - (-S2)) < 1e-15          # d a^2
        assert abs(d[1, 1] - (-1j * S2)) < 1e-15     # d b^2 + A^-2
        assert abs(f[1, 0] - (-S2)) < 1e-15          # e^{i phi} d a b
        assert abs(f[0, 1] - (1j * S2)) < 1e-15      # -e^{-i phi} A^4 d a b

    def test_normalization_invariants_across_theta_grid(self):
        for theta in (np.pi / 8, -np.pi / 8, np.pi / 6,
                      np.pi + np.pi / 8, np.pi - np.pi / 8):
            op = structured_braid_op(RepShape(2, 1), params=tl_params(theta))
            d0, d1 = op.diag_block[0, 0], op.diag_block[1, 1]
            f10, f01 = op.offdiag_block[1, 0], op.offdiag_block[0, 1]
            assert abs(abs(d0) ** 2 + abs(f10) ** 2 - 1.0) <= 1e-14
            assert abs(abs(d1) ** 2 + abs(f01) ** 2 - 1.0) <= 1e-14

    def test_b11_full_matrix(self):
        op = structured_braid_op(RepShape(1, 1))
        expected = -S2 * np.array([[1, -1j], [1, 1j]])
        assert max_abs(op.dense() - expected) < 1e-14

    def test_b21_matches_displayed_matrix(self):
        op = structured_braid_op(RepShape(2, 1))
        expected = -S2 * np.array([
            [1, 0, 0, -1j],
            [0, 1, -1j, 0],
            [0, 1, 1j, 0],
            [1, 0, 0, 1j],
        ])
        assert max_abs(op.dense() - expected) < 1e-13

    def test_dense_cross_validation_catches_tampering(self):
        # at n <= 8 the constructor compares against the Jones product
        op = structured_braid_op(RepShape(2, 1))
        assert max_abs(op.dense() - dense_b1b2(np.pi / 8, 0.0, 2, 1)) < 1e-14

    def test_capacity(self):
        with pytest.raises(CapacityError):
            structured_braid_op(RepShape(27, 1))


class TestApplyStructured:
    def test_b21_on_00(self):
        op = structured_braid_op(RepShape(2, 1))
        out = apply_structured(op, basis_state("00"))
        expected = np.array([-S2, 0, 0, -S2], dtype=complex)
        assert max_abs(out - expected) < 1e-13

    def test_b21_on_10(self):
        op = structured_braid_op(RepShape(2, 1))
        out = apply_structured(op, basis_state("10"))
        expected = np.array([0, 1j * S2, -1j * S2, 0], dtype=complex)
        assert max_abs(out - expected) < 1e-13

    def test_identity_involutions_give_product_state(self):
        from tlbraid import schmidt_rank
        shape = RepShape(4, 2)
        op = structured_braid_op(shape, spec=involution_spec(["i"] * 3))
        out = apply_structured(op, basis_state("0110"))
        for q in range(1, 4):
            assert schmidt_rank(out, range(1, q + 1)) == 1

    def test_basis_input_two_term_structure(self, rng):
        # Every basis state maps to its own index plus the s-dressed
        # conjugate partner with the predicted coefficients
        op = structured_braid_op(RepShape(4, 2))
        p = op.params
        for _ in range(10):
            bits = tuple(rng.integers(0, 2, size=4))
            out = apply_structured(op, basis_state(bits))
            nz = np.flatnonzero(np.abs(out) > 1e-14)
            assert len(nz) == 2
            partner = list(bits)
            partner[1] = 1 - partner[1]       # k = 2 flips
            partner[2] = 1 - partner[2]       # sigma1 dressing above k
            partner[3] = 1 - partner[3]
            assert set(nz) == {bits_to_index(bits), bits_to_index(partner)}
            same = out[bits_to_index(bits)]
            other = out[bits_to_index(partner)]
            if bits[1] == 0:
                assert abs(same - p.d * p.a ** 2) < 1e-14
                assert abs(other - p.d * p.a * p.b) < 1e-14
            else:
                assert abs(same - (p.d * p.b ** 2 + p.A ** -2)) < 1e-14
                assert abs(other - (-p.A ** 4 * p.d * p.a * p.b)) < 1e-14

    def test_single_term_when_ab_zero(self):
        # theta = pi/6 gives b = 0: the conjugate branch vanishes
        op = structured_braid_op(RepShape(3, 1), params=tl_params(np.pi / 6))
        out = apply_structured(op, basis_state("010"))
        nz = np.flatnonzero(np.abs(out) > 1e-14)
        assert len(nz) == 1 and nz[0] == bits_to_index("010")

    @pytest.mark.parametrize("names", [
        ("i", "x", "y"), ("z", "z", "x"), ("h", "x", "h"), ("y", "h", "i"),
    ])
    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_oracle_equivalence_random_states(self, rng, names, k):
        theta, phi = -np.pi / 8, np.pi / 3
        dense = dense_b1b2(theta, phi, 4, k, names)
        shape = RepShape(4, k)
        op = structured_braid_op(shape, params=tl_params(theta, phi),
                                 spec=involution_spec(names))
        for _ in range(10):
            v = random_state(rng, 4)
            assert max_abs(apply_structured(op, v) - dense @ v) < 1e-12
            assert max_abs(apply_structured(op, v, inverse=True)
                           - dense.conj().T @ v) < 1e-12

    def test_custom_involutions_match_dense(self, rng):
        # antidiagonal with a nontrivial phase (monomial path) and a tilted
        # Pauli axis (sweep path)
        chi = 0.9
        antidiag = np.array([[0, np.exp(-1j * chi)],
                             [np.exp(1j * chi), 0]])
        tilted = (np.array([[0, 1], [1, 0]]) * 0.6
                  + np.array([[1, 0], [0, -1]]) * 0.8).astype(complex)
        p = tl_params(np.pi / 8, 0.2)
        shape = RepShape(3, 2)
        spec = involution_spec([antidiag, tilted])
        rep = jones_representation(p, shape, spec)
        dense = rep.generators[0] @ rep.generators[1]
        op = structured_braid_op(shape, p, spec)
        for _ in range(5):
            v = random_state(rng, 3)
            assert max_abs(apply_structured(op, v) - dense @ v) < 1e-12

    def test_inverse_composes_to_identity(self, rng):
        op = structured_braid_op(RepShape(5, 3),
                                 spec=involution_spec(["z", "h", "x", "y"]))
        v = random_state(rng, 5)
        w = apply_structured(op, v)
        back = apply_structured(op, w, inverse=True)
        assert max_abs(back - v) < 1e-12

    def test_norm_preserved(self, rng):
        for names in (["x"] * 4, ["h", "i", "x", "z"]):
            op = structured_braid_op(RepShape(5, 2),
                                     spec=involution_spec(names))
            v = random_state(rng, 5)
            assert abs(norm(apply_structured(op, v)) - 1.0) < 1e-12

    def test_does_not_mutate_input(self, rng):
        op = structured_braid_op(RepShape(3, 1))
        v = random_state(rng, 3)
        v0 = v.copy()
        apply_structured(op, v)
        apply_structured(op, v, inverse=True)
        assert np.array_equal(v, v0)

    def test_dimension_mismatch(self):
        op = structured_braid_op(RepShape(3, 1))
        with pytest.raises(DimensionMismatchError):
            apply_structured(op, basis_state("00"))


class TestKernelBackends:
    def test_numpy_and_numba_paths_agree(self, rng):
        if _kernels.gather_pass_numba is None:
            pytest.skip("numba unavailable")
        n = 10
        v = random_state(rng, n)
        phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=1 << n))
        mask = 0b1010110011
        kbit = 1 << 4
        args = (v, phases, mask, kbit, 0.25 - 0.5j, -0.75 + 0.1j)
        assert max_abs(_kernels.gather_pass_numba(*args)
                       - _kernels.gather_pass_numpy(*args)) < 1e-14

    def test_phase_vector_is_kron_of_pairs(self):
        pairs = [(1.0, -1.0), (2.0, 3.0j), (0.5, 1.0)]
        p = _kernels.phase_vector(pairs)
        expected = np.kron(np.kron([1, -1], [2, 3j]), [0.5, 1.0])
        assert np.array_equal(p, expected)

    def test_env_flag_selects_numpy(self):
        import os
        import subprocess
        import sys
        code = ("import tlbraid; print(tlbraid.kernel_backend())")
        env = dict(os.environ, TLBRAID_NO_NUMBA="1")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.stdout.strip() == "numpy"


class TestGhz:
    def test_forward_n2_bell(self):
        v = ghz_state(2)
        expected = np.array([-S2, 0, 0, -S2], dtype=complex)
        assert max_abs(v - expected) < 1e-13

    def test_forward_n3_amplitudes(self):
        v = ghz_state(3)
        assert abs(v[0] - (-S2)) < 1e-13
        assert abs(v[7] - (-S2)) < 1e-13
        assert max_abs(np.delete(v, [0, 7])) == 0.0

    def test_inverse_n5(self):
        v = ghz_state(5, use_inverse=True)
        target = np.zeros(32, dtype=complex)
        target[0], target[31] = S2, 1j * S2
        # computed state carries a global -1 relative to the textbook form
        assert phase_equivalent(v, target, "global", 1e-13)
        assert max_abs(v + target) < 1e-13

    def test_forward_n1_hadamard_column(self):
        v = ghz_state(1)
        assert max_abs(v - np.array([-S2, -S2])) < 1e-13


class TestCluster:
    def test_n4_k3_matches_four_term_form(self):
        v = cluster_like_state(4, 3)
        target = np.zeros(16, dtype=complex)
        target[0b0000] = target[0b0011] = target[0b1100] = 0.5
        target[0b1111] = -0.5
        assert phase_equivalent(v, target, "global", 1e-12)
        # dense-oracle verdict: the computed state is exactly the displayed
        # one (no extra phase)
        assert max_abs(v - target) < 1e-13

    def test_n2_k2_entangled(self):
        from tlbraid import entanglement_report
        v = cluster_like_state(2, 2)
        report = entanglement_report(v, [1])
        assert not report.is_product
        assert report.entropy_bits > 0.1

    def test_k1_identity_action(self):
        v = cluster_like_state(3, 1)
        assert max_abs(v - basis_state("000")) < 1e-13

    def test_family_orthonormal_n2(self):
        family = cluster_family(2, 2)
        assert len(family) == 4
        gram = np.array([[np.vdot(u, w) for w in family] for u in family])
        assert max_abs(gram - np.eye(4)) < 1e-12

    def test_family_gram_n4_k3(self):
        family = cluster_family(4, 3)
        gram = np.array([[np.vdot(u, w) for w in family] for u in family])
        assert max_abs(gram - np.eye(16)) < 1e-12

    def test_family_capacity(self):
        with pytest.raises(CapacityError):
            cluster_family(13, 2)
