"""Stabilizer groups: validation, enumeration, intersections, overlaps, bounds."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from stabur import (
    InvalidGroupError,
    basis_state_group,
    dense_pauli,
    enumerate_elements,
    intersect,
    intersect_by_enumeration,
    mu_bound_stabilizer,
    overlap_squared,
    parse_pauli,
    random_pauli,
    stabilizer_expectation,
    stabilizer_state_dense,
    validate_group,
)
from stabur.stabgroup import parse_generator_lines, random_group

COMPLETE4 = [parse_pauli(s) for s in ("+XZZZ", "+ZXZZ", "+ZZXZ", "+ZZZX")]
PATH4 = [parse_pauli(s) for s in ("+XZII", "+ZXZI", "+IZXZ", "+IIZX")]


def test_validate_single_x():
    g = validate_group([parse_pauli("+X")])
    assert g.n == 1


def test_validate_complete_graph_generators():
    g = validate_group(COMPLETE4)
    assert g.n == 4


def test_validate_rejects_minus_identity():
    with pytest.raises(InvalidGroupError, match="-identity"):
        validate_group([parse_pauli("+X"), parse_pauli("-X")])


def test_validate_rejects_duplicate():
    with pytest.raises(InvalidGroupError, match="dependent generator 1"):
        validate_group([parse_pauli("+XI"), parse_pauli("+XI")])


def test_validate_rejects_noncommuting():
    with pytest.raises(InvalidGroupError, match=r"not commuting \(0,1\)"):
        validate_group([parse_pauli("+XI"), parse_pauli("+ZI")])


def test_validate_rejects_wrong_count():
    with pytest.raises(InvalidGroupError):
        validate_group([parse_pauli("+XX")])


def test_validate_rejects_non_hermitian():
    with pytest.raises(InvalidGroupError, match="Hermitian"):
        validate_group([parse_pauli("+iX")])


def test_enumerate_single_x():
    elems = {str(e) for e in enumerate_elements(validate_group([parse_pauli("+X")]))}
    assert elems == {"+I", "+X"}


def test_enumerate_bell_group_signs():
    # oracle: dense product of XX and ZZ equals -YY
    xx, zz = parse_pauli("+XX"), parse_pauli("+ZZ")
    dense = dense_pauli(xx) @ dense_pauli(zz)
    assert np.array_equal(dense, -dense_pauli(parse_pauli("+YY")))
    elems = {str(e) for e in enumerate_elements(validate_group([xx, zz]))}
    assert elems == {"+II", "+XX", "+ZZ", "-YY"}


def test_enumerate_complete4_all_real_signs():
    elems = enumerate_elements(validate_group(COMPLETE4))
    assert len(elems) == 16
    assert len({(e.x, e.z) for e in elems}) == 16
    assert all(e.is_hermitian for e in elems)
    assert sum(1 for e in elems if e.is_identity) == 1


def test_intersect_with_itself():
    g = validate_group(COMPLETE4)
    res = intersect(g, g)
    assert res.c == 4
    assert len(res.s_plus) == 16 and not res.s_minus


def test_intersect_x_vs_z():
    res = intersect(validate_group([parse_pauli("+X")]), validate_group([parse_pauli("+Z")]))
    assert res.c == 0
    assert [str(e) for e in res.s_plus] == ["+I"]
    assert not res.s_minus


def test_intersect_sign_flipped_bell():
    s = validate_group([parse_pauli("+XX"), parse_pauli("+ZZ")])
    t = validate_group([parse_pauli("+XX"), parse_pauli("-ZZ")])
    report = overlap_squared(s, t)
    assert (report.p, report.q) == (1, 2)
    assert report.overlap_squared == 0


def test_intersect_matches_enumeration(rng):
    for n in range(2, 6):
        for _ in range(10):
            s, t = random_group(n, rng), random_group(n, rng)
            fast = intersect(s, t)
            slow = intersect_by_enumeration(s, t)
            assert fast.c == slow.c
            assert set(fast.s_plus) == set(slow.s_plus)
            assert set(fast.s_minus) == set(slow.s_minus)


def test_overlap_same_group_is_one():
    g = validate_group(PATH4)
    assert overlap_squared(g, g).overlap_squared == 1


def test_overlap_x_vs_z_half():
    s = validate_group([parse_pauli("+X")])
    t = validate_group([parse_pauli("+Z")])
    report = overlap_squared(s, t)
    assert report.overlap_squared == Fraction(1, 2)
    # oracle: |<+|0>|^2 computed densely
    plus = stabilizer_state_dense(s).data
    zero = stabilizer_state_dense(t).data
    assert abs(abs(np.vdot(plus, zero)) ** 2 - 0.5) < 1e-12


def test_overlap_complete4_vs_path4_matches_amplitude():
    s, t = validate_group(COMPLETE4), validate_group(PATH4)
    report = overlap_squared(s, t)
    assert report.overlap_squared == Fraction(1, 16)  # square of the peak amplitude 1/4
    psi = stabilizer_state_dense(s).data
    phi = stabilizer_state_dense(t).data
    assert abs(abs(np.vdot(psi, phi)) ** 2 - 1 / 16) < 1e-12


def test_overlap_matches_dense_oracle(rng):
    for n in range(2, 6):
        for _ in range(10):
            s, t = random_group(n, rng), random_group(n, rng)
            got = float(overlap_squared(s, t).overlap_squared)
            psi = stabilizer_state_dense(s).data
            phi = stabilizer_state_dense(t).data
            assert abs(got - abs(np.vdot(psi, phi)) ** 2) < 1e-12


def test_p_never_below_q_minus_one(rng):
    for n in range(2, 6):
        for _ in range(10):
            report = overlap_squared(random_group(n, rng), random_group(n, rng))
            assert report.p >= report.q - 1
            assert report.q in (report.p, report.p + 1)


def test_basis_state_group_zero_label_identity():
    g = validate_group(COMPLETE4)
    assert basis_state_group(g, 0) == g


def test_basis_state_group_minus_x():
    flipped = basis_state_group(validate_group([parse_pauli("+X")]), 1)
    assert str(flipped.generators[0]) == "-X"
    # stabilizes |->
    minus = np.array([1, -1], dtype=complex) / np.sqrt(2)
    psi = stabilizer_state_dense(flipped).data
    assert abs(abs(np.vdot(psi, minus)) - 1) < 1e-10


def test_basis_state_orthogonal_to_original():
    g = validate_group(COMPLETE4)
    psi = stabilizer_state_dense(g).data
    phi = stabilizer_state_dense(basis_state_group(g, 0b1000)).data
    assert abs(np.vdot(psi, phi)) < 1e-10


def test_basis_labels_give_orthonormal_basis(rng):
    g = random_group(3, rng)
    mat = np.asarray(
        [stabilizer_state_dense(basis_state_group(g, k)).data for k in range(8)]
    )
    gram = mat.conj() @ mat.T
    assert np.max(np.abs(gram - np.eye(8))) < 1e-10


def test_basis_label_sequences_and_errors():
    g = validate_group(COMPLETE4)
    assert basis_state_group(g, [1, 0, 0, 0]) == basis_state_group(g, 0b1000)
    with pytest.raises(ValueError):
        basis_state_group(g, 16)
    with pytest.raises(ValueError):
        basis_state_group(g, [1, 0])


def test_stabilizer_expectation_identity_and_members():
    g = validate_group(COMPLETE4)
    assert stabilizer_expectation(g, parse_pauli("+IIII")) == 1
    for e in enumerate_elements(g):
        assert stabilizer_expectation(g, e) == 1
        assert stabilizer_expectation(g, e.negate()) == -1


def test_stabilizer_expectation_outside_group():
    assert stabilizer_expectation(validate_group([parse_pauli("+X")]), parse_pauli("+Z")) == 0


def test_stabilizer_expectation_rejects_non_hermitian():
    with pytest.raises(ValueError):
        stabilizer_expectation(validate_group([parse_pauli("+X")]), parse_pauli("+iZ"))


def test_stabilizer_expectation_matches_oracle(rng):
    for n in range(2, 6):
        g = random_group(n, rng)
        rho = stabilizer_state_dense(g)
        for _ in range(20):
            a = random_pauli(n, rng)
            got = stabilizer_expectation(g, a)
            dense = rho.expectation(dense_pauli(a))
            assert got in (-1, 0, 1)
            assert abs(got - dense) < 1e-10


def test_mu_bound_examples():
    s = validate_group([parse_pauli("+X")])
    t = validate_group([parse_pauli("+Z")])
    assert mu_bound_stabilizer(s, s) == 0.0
    assert mu_bound_stabilizer(s, t) == 0.5
    assert mu_bound_stabilizer(validate_group(COMPLETE4), validate_group(PATH4)) == 2.0


def test_two_valued_overlap_structure(rng):
    for _ in range(5):
        s, t = random_group(3, rng), random_group(3, rng)
        r = 2.0 ** (-mu_bound_stabilizer(s, t))
        mat_s = np.asarray(
            [stabilizer_state_dense(basis_state_group(s, k)).data for k in range(8)]
        )
        mat_t = np.asarray(
            [stabilizer_state_dense(basis_state_group(t, k)).data for k in range(8)]
        )
        overlaps = np.abs(mat_s.conj() @ mat_t.T)
        assert np.all((overlaps < 1e-10) | (np.abs(overlaps - r) < 1e-10))
        assert abs(overlaps.max() - r) < 1e-10


def test_generator_file_parsing():
    g = parse_generator_lines(
        ["# two qubits", "", "+XX  # first", "+ZZ", "   ", "# done"], source="inline"
    )
    assert g.n == 2


def test_generator_file_parse_error_names_line():
    with pytest.raises(ValueError, match=r"line 3"):
        parse_generator_lines(["# header", "+XX", "+ZQ"], source="inline")


def test_generator_file_group_error_names_source():
    with pytest.raises(InvalidGroupError, match="inline"):
        parse_generator_lines(["+XI", "+ZI"], source="inline")


def test_generator_file_empty():
    with pytest.raises(ValueError, match="no generators"):
        parse_generator_lines(["# nothing"], source="inline")


def test_random_group_is_valid(rng):
    for n in range(1, 7):
        g = random_group(n, rng)
        assert validate_group(g.generators) == g
