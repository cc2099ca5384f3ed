"""Matrix-free evaluation of the braid representations an operator induces.

A braid on ``n`` strands acts on ``N`` factors of dimension ``d``, where
``N = k + m (n - 2)`` for ``n >= 2`` and ``N = k - m`` for the one-strand
identity braid. Generator ``i`` applies the operator to the ``k``
contiguous factors starting at ``m (i - 1) + 1``; inverse letters apply
the cached inverse. The full representation matrix is never materialized:
states are reshaped so the acted-on factors form one axis and the block
is applied with a batched matrix product.

Word order: the first letter of a word acts first on states, so a word
maps to the composition of its letters read right to left.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braids import BraidWord
from .errors import ResourceCapError, ShapeError
from .operators import GybOperator
from .tensorops import TensorShape, identity, tensor_embed

#: Largest representation dimension accepted without an explicit override.
DIM_CAP = 2048

#: Basis columns are processed in fixed chunks of this many vectors, in
#: index order, so trace sums are reproducible run to run.
TRACE_CHUNK = 1024


@dataclass(frozen=True, eq=False)
class RepContext:
    """Size data for one representation: operator, strand count, factors."""

    op: GybOperator
    n: int
    factors: int
    dim: int


def make_context(op: GybOperator, n: int, allow_large: bool = False) -> RepContext:
    """Build the context for braids on ``n`` strands.

    Refuses dimensions beyond DIM_CAP unless ``allow_large`` is set; costs
    grow with the square of the dimension.
    """
    if n < 1:
        raise ShapeError(f"strand count must be positive, got {n}")
    g = op.gtype
    factors = g.k + g.m * (n - 2) if n >= 2 else g.k - g.m
    dim = g.d**factors
    if dim > DIM_CAP and not allow_large:
        raise ResourceCapError(
            f"representation dimension {dim} for {n} strands exceeds the cap {DIM_CAP}; "
            "pass allow_large=True (CLI: --allow-large) to override"
        )
    return RepContext(op, n, factors, dim)


def _apply_block(mat: np.ndarray, start: int, span_dim: int, state: np.ndarray, d: int) -> np.ndarray:
    # state holds one column per basis vector of the batch; reshape so the
    # acted-on factors form the middle axis, batch folded into the last.
    left = d ** (start - 1)
    shape = state.shape
    state3 = state.reshape(left, span_dim, -1)
    return np.matmul(mat, state3).reshape(shape)


def apply_letter(ctx: RepContext, g: int, state: np.ndarray) -> np.ndarray:
    """Apply one represented letter to a (dim, batch) array of columns."""
    i = abs(g)
    if i < 1 or i > ctx.n - 1:
        raise ShapeError(f"letter {g} is out of range for {ctx.n} strands")
    t = ctx.op.gtype
    mat = ctx.op.r if g > 0 else ctx.op.r_inv
    return _apply_block(mat, t.m * (i - 1) + 1, t.dim, state, t.d)


def rep_apply(ctx: RepContext, b: BraidWord, v) -> np.ndarray:
    """Apply the represented braid to a state vector of length ``ctx.dim``."""
    if b.strands != ctx.n:
        raise ShapeError(f"braid has {b.strands} strands, context expects {ctx.n}")
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (ctx.dim,):
        raise ShapeError(f"state must have length {ctx.dim}, got shape {v.shape}")
    state = v.reshape(ctx.dim, 1)
    for g in b.letters:
        state = apply_letter(ctx, g, state)
    return state.ravel()


def dense_representation(ctx: RepContext, b: BraidWord) -> np.ndarray:
    """Dense matrix of the represented braid, assembled with Kronecker
    embeddings. Cross-check oracle for the matrix-free path; dimension
    grows as ``d**N``, keep ``n`` small.
    """
    if b.strands != ctx.n:
        raise ShapeError(f"braid has {b.strands} strands, context expects {ctx.n}")
    t = ctx.op.gtype
    shape = TensorShape(t.d, ctx.factors)
    out = identity(ctx.dim)
    for g in b.letters:
        mat = ctx.op.r if g > 0 else ctx.op.r_inv
        out = tensor_embed(mat, t.m * (abs(g) - 1) + 1, shape) @ out
    return out


def trace_with_weight(ctx: RepContext, b: BraidWord, blocks=None, chunk: int = TRACE_CHUNK) -> complex:
    """Trace of the represented braid composed with a product weight.

    Args:
        ctx: representation context matching ``b``.
        b: braid word to represent.
        blocks: optional sequence of ``(matrix, span)`` pairs laid out left
            to right; their spans must cover all ``ctx.factors`` factors.
            None means the identity weight. Blocks that equal the identity
            are skipped.
        chunk: basis-column chunk size; fixed chunking in index order keeps
            the floating-point reduction deterministic.

    Returns:
        ``tr(rho(b) . W)`` where ``W`` is the Kronecker product of the blocks.
    """
    if b.strands != ctx.n:
        raise ShapeError(f"braid has {b.strands} strands, context expects {ctx.n}")
    d = ctx.op.gtype.d
    placed = []
    if blocks is not None:
        pos = 1
        for mat, span in blocks:
            mat = np.asarray(mat, dtype=np.complex128)
            span_dim = d**span
            if mat.shape != (span_dim, span_dim):
                raise ShapeError(f"weight block spanning {span} factors must be {span_dim}x{span_dim}")
            if not np.array_equal(mat, identity(span_dim)):
                placed.append((mat, pos, span_dim))
            pos += span
        if pos - 1 != ctx.factors:
            raise ShapeError(f"weight blocks cover {pos - 1} factors, context has {ctx.factors}")
    total = 0.0 + 0.0j
    for c0 in range(0, ctx.dim, chunk):
        c1 = min(c0 + chunk, ctx.dim)
        state = np.eye(ctx.dim, c1 - c0, -c0, dtype=np.complex128)
        for mat, pos, span_dim in placed:
            state = _apply_block(mat, pos, span_dim, state, d)
        for g in b.letters:
            state = apply_letter(ctx, g, state)
        total += np.trace(state[c0:c1, :])
    return complex(total)
