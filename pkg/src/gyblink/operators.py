"""The built-in generalized Yang-Baxter operator catalog and validity checks.

An operator of type ``(d, k, m)`` is an invertible matrix on ``k`` factors
of dimension ``d``. It induces braid-group representations by acting on
``k`` contiguous factors at strides of ``m``, which is consistent exactly
when the braid relation and far commutativity hold for those embeddings;
``verify_gybe`` and ``verify_far_commutativity`` measure both residuals.

Catalog entries: three one-parameter unitary families of type (2, 3, 1),
``type1``/``type2``/``type3``, each a direct sum of two 4x4 blocks scaled
by 1/sqrt(2), and one fixed type (2, 3, 2) operator ``r232``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import GybError, OperatorFileError, ShapeError
from .tensorops import (
    DEFAULT_TOL,
    TensorShape,
    as_matrix,
    dagger,
    identity,
    mat_inverse,
    max_abs,
    tensor_embed,
)

_SQ2 = np.sqrt(2.0)

CATALOG_IDS = ("type1", "type2", "type3", "r232")


@dataclass(frozen=True)
class GybType:
    """Shape data ``(d, k, m)``: factor dimension, span, and stride."""

    d: int
    k: int
    m: int

    def __post_init__(self):
        if self.d < 1 or self.k < 1 or self.m < 1:
            raise ShapeError(f"type parameters must be positive, got {self}")
        if self.m >= self.k:
            raise ShapeError(f"stride must be smaller than span, got {self}")

    @property
    def dim(self) -> int:
        return self.d**self.k


@dataclass(frozen=True, eq=False)
class GybOperator:
    """An invertible operator together with its cached inverse.

    ``theta`` is the family parameter for the one-parameter catalog
    entries and None otherwise.
    """

    gtype: GybType
    r: np.ndarray
    r_inv: np.ndarray
    op_id: str
    theta: float | None = None


def _checked_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 <= theta <= np.pi:
        warnings.warn(
            f"theta={theta} lies outside [0, pi]; the matrices stay well defined",
            RuntimeWarning,
            stacklevel=3,
        )
    return theta


def _two_blocks(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # 8x8 direct sum: block a on the first four lexicographic basis
    # vectors (first factor fixed to its first state), block b on the rest.
    out = np.zeros((8, 8), dtype=np.complex128)
    out[:4, :4] = a
    out[4:, 4:] = b
    return out


def _finish(op_id: str, theta: float | None, gtype: GybType, r: np.ndarray) -> GybOperator:
    return GybOperator(gtype, r, mat_inverse(r, tol=1e-12), op_id, theta)


def build_type1(theta: float = 0.0) -> GybOperator:
    """First (2, 3, 1) family; unitary for every theta."""
    t = _checked_theta(theta)
    e1, e2 = np.exp(1j * t), np.exp(2j * t)
    a = np.array(
        [
            [1, 0, 1, 0],
            [0, 1j, 0, e1],
            [-1j, 0, 1j, 0],
            [0, -1j / e1, 0, 1],
        ],
        dtype=np.complex128,
    ) / _SQ2
    b = np.array(
        [
            [1j, 0, e1, 0],
            [0, 1, 0, -e2],
            [-1j / e1, 0, 1, 0],
            [0, 1j / e2, 0, 1j],
        ],
        dtype=np.complex128,
    ) / _SQ2
    return _finish("type1", t, GybType(2, 3, 1), _two_blocks(a, b))


def build_type2(theta: float = 0.0) -> GybOperator:
    """Second (2, 3, 1) family."""
    t = _checked_theta(theta)
    e1, e2 = np.exp(1j * t), np.exp(2j * t)
    a = np.array(
        [
            [1, 0, 1, 0],
            [0, 1j, 0, e1],
            [-1, 0, 1, 0],
            [0, 1 / e1, 0, 1j],
        ],
        dtype=np.complex128,
    ) / _SQ2
    b = np.array(
        [
            [1j, 0, e1, 0],
            [0, 1, 0, -e2],
            [1 / e1, 0, 1j, 0],
            [0, 1 / e2, 0, 1],
        ],
        dtype=np.complex128,
    ) / _SQ2
    return _finish("type2", t, GybType(2, 3, 1), _two_blocks(a, b))


def build_type3(theta: float = 0.0) -> GybOperator:
    """Third (2, 3, 1) family; satisfies r + r^-1 = sqrt(2) id."""
    t = _checked_theta(theta)
    e1, e2 = np.exp(1j * t), np.exp(2j * t)
    a = np.array(
        [
            [1, 0, 1, 0],
            [0, 1, 0, e1],
            [-1, 0, 1, 0],
            [0, -1 / e1, 0, 1],
        ],
        dtype=np.complex128,
    ) / _SQ2
    b = np.array(
        [
            [1, 0, -e1, 0],
            [0, 1, 0, -e2],
            [1 / e1, 0, 1, 0],
            [0, 1 / e2, 0, 1],
        ],
        dtype=np.complex128,
    ) / _SQ2
    return _finish("type3", t, GybType(2, 3, 1), _two_blocks(a, b))


def build_r232() -> GybOperator:
    """The fixed (2, 3, 2) operator; no family parameter."""
    j = np.zeros((4, 4), dtype=np.complex128)
    j[0, 3] = j[1, 2] = j[2, 1] = j[3, 0] = 1
    eye4 = identity(4)
    r = np.block([[eye4, j], [-j, eye4]]) / _SQ2
    return _finish("r232", None, GybType(2, 3, 2), r)


def load_custom(matrix, gtype: GybType, op_id: str = "custom") -> GybOperator:
    """Wrap a user matrix as an operator of the given type.

    Only squareness against ``gtype.dim`` and invertibility are enforced
    here; whether the matrix actually satisfies the braid-consistency
    identities is up to the verification functions.
    """
    r = as_matrix(matrix)
    if r.shape[0] != gtype.dim:
        raise ShapeError(f"matrix dimension {r.shape[0]} does not match {gtype} (wants {gtype.dim})")
    return GybOperator(gtype, r, mat_inverse(r), op_id, None)


def parse_scalar(text: str) -> complex:
    """Parse ``a+bi`` style complex scalars; plain reals also accepted."""
    tok = text.strip().replace(" ", "")
    try:
        return complex(tok.replace("i", "j"))
    except ValueError:
        raise OperatorFileError(f"bad complex scalar {tok!r}") from None


def format_scalar(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def read_operator_file(path) -> GybOperator:
    """Read an operator file.

    Layout: first non-blank line is ``d k m``; the next ``d**k`` lines each
    hold ``d**k`` whitespace-separated complex entries in ``a+bi`` form,
    one matrix row per line.
    """
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise OperatorFileError(f"{path}: empty operator file")
    head = lines[0].split()
    if len(head) != 3:
        raise OperatorFileError(f"{path}: first line must be 'd k m', got {lines[0]!r}")
    try:
        d, k, m = (int(x) for x in head)
    except ValueError:
        raise OperatorFileError(f"{path}: first line must be 'd k m', got {lines[0]!r}") from None
    gtype = GybType(d, k, m)
    dim = gtype.dim
    if len(lines) - 1 != dim:
        raise OperatorFileError(f"{path}: expected {dim} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        toks = line.split()
        if len(toks) != dim:
            raise OperatorFileError(f"{path}:{lineno}: expected {dim} entries, found {len(toks)}")
        rows.append([parse_scalar(t) for t in toks])
    return load_custom(np.array(rows, dtype=np.complex128), gtype)


def write_operator_file(path, op: GybOperator) -> None:
    """Inverse of read_operator_file."""
    g = op.gtype
    lines = [f"{g.d} {g.k} {g.m}"]
    for row in op.r:
        lines.append(" ".join(format_scalar(z) for z in row))
    Path(path).write_text("\n".join(lines) + "\n")


def build_operator(name: str, theta: float = 0.0) -> GybOperator:
    """Dispatch on a catalog id or ``custom:<path>``.

    ``theta`` only reaches the one-parameter families; ``r232`` and custom
    operators have no parameter and ignore it.
    """
    if name == "type1":
        return build_type1(theta)
    if name == "type2":
        return build_type2(theta)
    if name == "type3":
        return build_type3(theta)
    if name == "r232":
        return build_r232()
    if name.startswith("custom:"):
        return read_operator_file(name.split(":", 1)[1])
    raise GybError(f"unknown operator {name!r}; expected one of {CATALOG_IDS} or custom:<path>")


def unitarity_residual(op: GybOperator) -> float:
    """Max-entry residual of ``dagger(r) r - id``."""
    return max_abs(dagger(op.r) @ op.r - identity(op.gtype.dim))


def verify_gybe(op: GybOperator) -> float:
    """Braid-relation residual on ``k + m`` factors.

    Embeds the operator at positions 1 and ``m + 1`` and compares the two
    alternating triple products.
    """
    g = op.gtype
    shape = TensorShape(g.d, g.k + g.m)
    lo = tensor_embed(op.r, 1, shape)
    hi = tensor_embed(op.r, g.m + 1, shape)
    return max_abs(lo @ hi @ lo - hi @ lo @ hi)


def verify_far_commutativity(op: GybOperator) -> float:
    """Max commutator residual over all overlapping distant embeddings.

    Generators ``1`` and ``j - 1`` overlap while ``(j - 2) m < k``; once the
    embedded blocks are disjoint, commutation is automatic, so the scan
    stops there. Returns 0.0 when no overlapping case exists.
    """
    g = op.gtype
    worst = 0.0
    j = 4
    while (j - 2) * g.m < g.k:
        shape = TensorShape(g.d, g.k + (j - 2) * g.m)
        lo = tensor_embed(op.r, 1, shape)
        hi = tensor_embed(op.r, (j - 2) * g.m + 1, shape)
        worst = max(worst, max_abs(lo @ hi - hi @ lo))
        j += 1
    return worst


def check_outer_diagonal(op: GybOperator, tol: float = DEFAULT_TOL) -> bool:
    """Whether the operator and its inverse act diagonally on the first and
    last factor, i.e. every entry with mismatched outer indices vanishes.

    Defined for type ``(d, 3, 1)`` operators only.
    """
    g = op.gtype
    if (g.k, g.m) != (3, 1):
        raise ShapeError(f"outer-diagonality is defined for (d, 3, 1) operators, got {g}")
    d = g.d
    same = np.eye(d, dtype=bool)
    # keep[j1, j2, j3, i1, i2, i3] is True where entries may be nonzero
    keep = same[:, None, None, :, None, None] & same[None, None, :, None, None, :]
    for mat in (op.r, op.r_inv):
        t = mat.reshape(d, d, d, d, d, d)
        if max_abs(np.where(keep, 0.0, t)) > tol:
            return False
    return True
