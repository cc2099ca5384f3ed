import numpy as np
import pytest

from gyblink.errors import GybError, OperatorFileError, ShapeError, SingularMatrixError
from gyblink.operators import (
    GybOperator,
    GybType,
    build_operator,
    build_r232,
    build_type1,
    build_type2,
    build_type3,
    check_outer_diagonal,
    format_scalar,
    load_custom,
    parse_scalar,
    read_operator_file,
    unitarity_residual,
    verify_far_commutativity,
    verify_gybe,
    write_operator_file,
)
from gyblink.tensorops import dagger, identity, matrices_close, max_abs

SQ2 = np.sqrt(2.0)
ALPHA = np.exp(1j * np.pi / 4)
FAMILIES = [build_type1, build_type2, build_type3]
THETAS = np.linspace(0.0, np.pi, 16)


def test_gybtype_validation():
    t = GybType(2, 3, 1)
    assert t.dim == 8
    assert GybType(2, 3, 2).dim == 8
    with pytest.raises(ShapeError):
        GybType(2, 3, 3)
    with pytest.raises(ShapeError):
        GybType(2, 0, 1)


def test_type1_entries_at_zero():
    r = build_type1(0.0).r
    assert r[0, 0] == pytest.approx(1 / SQ2)
    assert r[1, 3] == pytest.approx(1 / SQ2)
    assert r[2, 0] == pytest.approx(-1j / SQ2)
    assert r[1, 1] == pytest.approx(1j / SQ2)
    # direct sum: no coupling between the two 4x4 blocks
    assert max_abs(r[:4, 4:]) == 0 and max_abs(r[4:, :4]) == 0


def test_r232_entries():
    r = build_r232().r
    assert r[0, 7] == pytest.approx(1 / SQ2)
    assert r[4, 3] == pytest.approx(-1 / SQ2)
    assert r[0, 0] == pytest.approx(1 / SQ2)
    assert max_abs(r) == pytest.approx(1 / SQ2)


def test_r232_square_swaps_blocks():
    # r^2 has zero diagonal blocks and the antidiagonal permutation off it
    r = build_r232().r
    sq = r @ r
    assert max_abs(sq[:4, :4]) < 1e-15
    assert sq[0, 7] == pytest.approx(1)
    assert sq[4, 3] == pytest.approx(-1)
    assert abs(np.trace(sq)) < 1e-15


@pytest.mark.parametrize("build", FAMILIES)
def test_family_validity_over_theta_grid(build):
    for theta in THETAS:
        op = build(theta)
        assert unitarity_residual(op) < 1e-12
        assert verify_gybe(op) < 1e-12
        assert verify_far_commutativity(op) < 1e-12


def test_r232_validity():
    op = build_r232()
    assert unitarity_residual(op) < 1e-12
    assert verify_gybe(op) < 1e-12
    # blocks three-or-more positions apart never overlap a (2,3,2) embedding
    assert verify_far_commutativity(op) == 0.0


@pytest.mark.parametrize("build", FAMILIES)
def test_family_outer_index_sparsity(build):
    # entries vanish unless the first and third factor indices pass through
    op = build(0.9)
    t = op.r.reshape(2, 2, 2, 2, 2, 2)
    for j1 in range(2):
        for j3 in range(2):
            for i1 in range(2):
                for i3 in range(2):
                    if j1 != i1 or j3 != i3:
                        assert max_abs(t[j1, :, j3, i1, :, i3]) == 0
    assert check_outer_diagonal(op)


def test_outer_diagonal_counterexamples():
    assert check_outer_diagonal(load_custom(identity(8), GybType(2, 3, 1)))
    mislabeled = load_custom(build_r232().r, GybType(2, 3, 1), "mislabeled")
    assert not check_outer_diagonal(mislabeled)
    with pytest.raises(ShapeError):
        check_outer_diagonal(build_r232())


def test_mislabeled_r232_fails_far_commutativity():
    # its braid-relation residual is ~1e-16, so the distant-commutation
    # axiom is what actually rejects the (2,3,1) labeling
    mislabeled = load_custom(build_r232().r, GybType(2, 3, 1), "mislabeled")
    assert verify_gybe(mislabeled) < 1e-12
    assert verify_far_commutativity(mislabeled) > 0.1


def test_random_unitary_is_not_gyb():
    rng = np.random.default_rng(7)
    z = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    q, _ = np.linalg.qr(z)
    op = load_custom(q, GybType(2, 3, 1), "randu")
    assert verify_gybe(op) > 0.1


@pytest.mark.parametrize("theta", [0.0, 0.4, 1.3, np.pi])
def test_minimal_polynomials(theta):
    op = build_type1(theta)
    assert max_abs(op.r / ALPHA + ALPHA * op.r_inv - identity(8)) < 1e-12
    op = build_type2(theta)
    assert max_abs(op.r @ op.r / ALPHA**2 - op.r / ALPHA + identity(8) - ALPHA * op.r_inv) < 1e-12
    op = build_type3(theta)
    assert max_abs(op.r + op.r_inv - SQ2 * identity(8)) < 1e-12
    op = build_r232()
    assert max_abs(op.r + op.r_inv - SQ2 * identity(8)) < 1e-12


def test_traces_do_not_depend_on_theta():
    for theta in THETAS:
        assert np.trace(build_type1(theta).r) == pytest.approx(4 * ALPHA, abs=1e-12)
        assert np.trace(build_type2(theta).r) == pytest.approx(4 * ALPHA, abs=1e-12)
        assert np.trace(build_type3(theta).r) == pytest.approx(4 * SQ2, abs=1e-12)
    assert np.trace(build_r232().r) == pytest.approx(4 * SQ2, abs=1e-12)


def test_inverse_is_cached_and_consistent():
    for build in FAMILIES:
        op = build(2.0)
        assert matrices_close(op.r @ op.r_inv, identity(8), 1e-12)
        assert matrices_close(op.r_inv, dagger(op.r), 1e-12)


def test_theta_outside_range_warns():
    with pytest.warns(RuntimeWarning):
        op = build_type2(4.0)
    assert unitarity_residual(op) < 1e-12
    with pytest.warns(RuntimeWarning):
        build_type3(-0.1)


def test_build_operator_dispatch():
    assert build_operator("type1", 0.5).op_id == "type1"
    assert build_operator("r232").op_id == "r232"
    assert build_operator("r232", theta=1.0).theta is None
    with pytest.raises(GybError):
        build_operator("type9")


def test_load_custom_validation():
    with pytest.raises(ShapeError):
        load_custom(identity(4), GybType(2, 3, 1))
    with pytest.raises(SingularMatrixError):
        load_custom(np.zeros((8, 8)), GybType(2, 3, 1))


def test_scalar_round_trip():
    for z in (0j, 1 + 0j, -2.5 + 0.125j, 0.5j, complex(1 / 3, -1 / 7)):
        assert parse_scalar(format_scalar(z)) == z
    assert parse_scalar("2") == 2
    assert parse_scalar("-1.5i") == -1.5j
    with pytest.raises(OperatorFileError):
        parse_scalar("one+two-i")


def test_operator_file_round_trip(tmp_path):
    path = tmp_path / "op.mat"
    original = build_type2(0.8)
    write_operator_file(path, original)
    loaded = read_operator_file(path)
    assert isinstance(loaded, GybOperator)
    assert loaded.gtype == GybType(2, 3, 1)
    assert loaded.theta is None
    assert matrices_close(loaded.r, original.r, 0)
    assert build_operator(f"custom:{path}").op_id == "custom"


def test_operator_file_errors(tmp_path):
    path = tmp_path / "bad.mat"
    path.write_text("")
    with pytest.raises(OperatorFileError):
        read_operator_file(path)
    path.write_text("2 3\n")
    with pytest.raises(OperatorFileError):
        read_operator_file(path)
    path.write_text("2 2 1\n1+0i 0+0i\n0+0i 1+0i\n")
    with pytest.raises(OperatorFileError):
        read_operator_file(path)  # 2 rows given, dimension is 4
    rows = "\n".join("1+0i " * 3 for _ in range(4))
    path.write_text("2 2 1\n" + rows + "\n")
    with pytest.raises(OperatorFileError):
        read_operator_file(path)  # short rows
