"""Link invariants of closed braids and checkers for their relations.

The raw invariant of a braid ``b`` on ``n`` strands under an enhancement
``s`` is

    alpha^(-writhe(b)) beta^(-n) tr(rho(b) . mu^(x)N)

with ``N`` the number of represented factors. Its value depends only on
the link the closure of ``b`` presents, which is what ``markov_check``
probes numerically. Two derived normalizations are available: ``P``
rescales so the unknot maps to 1 (known for type1, type3, r232), and
``tilde`` rescales by a power of ``tr(mu)`` so split unions multiply.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braids import BraidWord, compose, conjugate, juxtapose, random_braid, stabilize, writhe
from .enhancement import Enhancement, catalog_enhancement
from .errors import GybError, ShapeError
from .rep import make_context, trace_with_weight

_SQ2 = np.sqrt(2.0)

#: Unknot-normalization factors for the catalog enhancements that have one.
P_FACTORS: dict[str, complex] = {
    "type1": 0.25,
    "type3": 1.0 / (2.0 * _SQ2),
    "r232": _SQ2,
}


@dataclass(frozen=True)
class InvariantResult:
    """One evaluated invariant with enough context to reproduce it."""

    value: complex
    operator_id: str
    theta: float | None
    braid: BraidWord
    writhe: int
    normalization: str


def trace_invariant(s: Enhancement, b: BraidWord, allow_large: bool = False) -> InvariantResult:
    """Evaluate the raw invariant of the closure of ``b``.

    The weighted trace runs matrix-free over basis columns; cost grows
    with the square of the representation dimension, which is capped
    unless ``allow_large`` is set.
    """
    ctx = make_context(s.op, b.strands, allow_large)
    blocks = None if s.mu_is_identity else [(s.mu, 1)] * ctx.factors
    tr = trace_with_weight(ctx, b, blocks)
    w = writhe(b)
    value = s.alpha ** (-w) * s.beta ** (-b.strands) * tr
    return InvariantResult(complex(value), s.op.op_id, s.op.theta, b, w, "raw")


def normalized_invariant(s: Enhancement, b: BraidWord, allow_large: bool = False) -> InvariantResult:
    """Unknot-normalized value; only defined for type1, type3, and r232."""
    factor = P_FACTORS.get(s.op.op_id)
    if factor is None:
        raise GybError(f"no unknot normalization is known for operator {s.op.op_id!r}")
    raw = trace_invariant(s, b, allow_large)
    return InvariantResult(raw.value * factor, raw.operator_id, raw.theta, b, raw.writhe, "P")


def multiplicative_invariant(s: Enhancement, b: BraidWord, allow_large: bool = False) -> InvariantResult:
    """Rescaling by tr(mu)^(2m - k); multiplicative under split union."""
    g = s.op.gtype
    raw = trace_invariant(s, b, allow_large)
    value = raw.value * s.mu_trace ** (2 * g.m - g.k)
    return InvariantResult(value, raw.operator_id, raw.theta, b, raw.writhe, "tilde")


def _with_front_letter(b: BraidWord, g: int) -> BraidWord:
    return compose(BraidWord(b.strands, (g,)), b)


def skein_check(s: Enhancement, b: BraidWord, x: complex = 1.0, y: complex = 1.0,
                allow_large: bool = False) -> float:
    """Residual of ``x T(+crossing) + x^-1 T(-crossing) - y T(bare)``.

    The three braids differ by a first-generator letter put in front of
    ``b``, so their closures form a crossing triple at that site.
    """
    if b.strands < 2:
        raise ShapeError("a crossing triple needs at least 2 strands")
    tp = trace_invariant(s, _with_front_letter(b, 1), allow_large).value
    tm = trace_invariant(s, _with_front_letter(b, -1), allow_large).value
    t0 = trace_invariant(s, b, allow_large).value
    return abs(x * tp + tm / x - y * t0)


def quartic_check_type2(s: Enhancement, b: BraidWord, allow_large: bool = False) -> float:
    """Residual of the four-term crossing relation of the type2 family:
    T(++) - T(+) + T(bare) - T(-) with crossings stacked in front of ``b``.
    """
    if s.op.op_id != "type2":
        raise GybError(f"the four-term crossing relation is specific to type2, got {s.op.op_id!r}")
    if b.strands < 2:
        raise ShapeError("the crossing relation needs at least 2 strands")
    t2 = trace_invariant(s, _with_front_letter(_with_front_letter(b, 1), 1), allow_large).value
    t1 = trace_invariant(s, _with_front_letter(b, 1), allow_large).value
    t0 = trace_invariant(s, b, allow_large).value
    tm = trace_invariant(s, _with_front_letter(b, -1), allow_large).value
    return abs(t2 - t1 + t0 - tm)


def markov_check(s: Enhancement, b: BraidWord, trials: int = 10, seed: int = 0,
                 allow_large: bool = False) -> float:
    """Largest deviation of the invariant under moves that fix the closure.

    Conjugates ``b`` by ``trials`` seeded random words and applies both
    stabilizations; returns the max absolute difference from the base value.
    """
    base = trace_invariant(s, b, allow_large).value
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        eta = random_braid(b.strands, int(rng.integers(0, 7)), rng)
        moved = trace_invariant(s, conjugate(b, eta), allow_large).value
        worst = max(worst, abs(moved - base))
    for sign in (1, -1):
        moved = trace_invariant(s, stabilize(b, sign), allow_large).value
        worst = max(worst, abs(moved - base))
    return worst


def multiplicativity_check(s: Enhancement, b1: BraidWord, b2: BraidWord,
                           allow_large: bool = False) -> float:
    """Residual of T(split union) = tr(mu)^(2m - k) T(b1) T(b2)."""
    g = s.op.gtype
    t12 = trace_invariant(s, juxtapose(b1, b2), allow_large).value
    t1 = trace_invariant(s, b1, allow_large).value
    t2 = trace_invariant(s, b2, allow_large).value
    return abs(t12 - s.mu_trace ** (2 * g.m - g.k) * t1 * t2)


def cross_operator_check(b: BraidWord, theta: float = 0.0,
                         s3: Enhancement | None = None, s232: Enhancement | None = None,
                         allow_large: bool = False) -> float:
    """Residual of the identity (1/4) T_type3 = T_r232 on the same closure.

    Prebuilt enhancements can be passed to avoid rebuilding in loops.
    """
    s3 = catalog_enhancement("type3", theta) if s3 is None else s3
    s232 = catalog_enhancement("r232") if s232 is None else s232
    v3 = trace_invariant(s3, b, allow_large).value
    v232 = trace_invariant(s232, b, allow_large).value
    return abs(0.25 * v3 - v232)
