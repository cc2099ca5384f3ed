"""End-to-end acceptance checks, one per shipped guarantee.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion. Each check prints its line before asserting, so a
red run still reports every criterion it reached.
"""

import time

import numpy as np
import pytest

from gyblink.braids import BraidWord, LINKS, juxtapose, random_braid
from gyblink.enhancement import catalog_enhancement
from gyblink.invariant import (
    cross_operator_check,
    markov_check,
    multiplicative_invariant,
    multiplicativity_check,
    quartic_check_type2,
    skein_check,
    trace_invariant,
)
from gyblink.operators import (
    build_operator,
    build_r232,
    build_type1,
    build_type2,
    build_type3,
    check_outer_diagonal,
    unitarity_residual,
    verify_far_commutativity,
    verify_gybe,
)
from gyblink.rep import dense_representation, make_context, rep_apply, trace_with_weight
from gyblink.tensorops import TensorShape, identity, max_abs, partial_trace_last

SQ2 = np.sqrt(2.0)
ALPHA = np.exp(1j * np.pi / 4)
THETA_GRID = np.linspace(0.0, np.pi, 16)
FAMILY_BUILDERS = {"type1": build_type1, "type2": build_type2, "type3": build_type3}


def _report(num: int, label: str, worst: float, bound: float) -> None:
    ok = worst <= bound
    print(f"acceptance {num:02d} {label}: {'PASS' if ok else 'FAIL'} "
          f"(worst {worst:.3e}, bound {bound:.1e})")
    assert ok, f"{label}: worst residual {worst:.6e} exceeds {bound:.1e}"


def _sampled_braid(rng, n_lo, n_hi, max_len):
    n = int(rng.integers(n_lo, n_hi + 1))
    return random_braid(n, int(rng.integers(1, max_len + 1)), rng)


def test_01_operator_identities():
    worst = 0.0
    for build in FAMILY_BUILDERS.values():
        for theta in THETA_GRID:
            op = build(theta)
            worst = max(worst, unitarity_residual(op), verify_gybe(op),
                        verify_far_commutativity(op))
            assert check_outer_diagonal(op)
    op = build_r232()
    worst = max(worst, unitarity_residual(op), verify_gybe(op),
                verify_far_commutativity(op))
    _report(1, "operator identities on the theta grid", worst, 1e-12)


def test_02_wide_operator_partial_trace():
    op = build_r232()
    shape = TensorShape(2, 3)
    target = 2 * SQ2 * identity(2)
    worst = max(
        max_abs(partial_trace_last(op.r, shape, 2) - target),
        max_abs(partial_trace_last(op.r_inv, shape, 2) - target),
    )
    _report(2, "wide operator traces to a scalar", worst, 1e-12)


def test_03_trivial_links():
    expected = {
        "type1": lambda n: 2.0 ** (n + 1),
        "type2": lambda n: 2.0 ** (n + 1),
        "type3": lambda n: SQ2 ** (-n) * 2.0 ** (n + 1),
        "r232": lambda n: SQ2 ** (-n) * 2.0 ** (n - 1),
    }
    worst = 0.0
    for name, formula in expected.items():
        s = catalog_enhancement(name, 0.35)
        for n in range(1, 7):
            got = trace_invariant(s, BraidWord(n, ())).value
            worst = max(worst, abs(got - formula(n)))
    _report(3, "trivial link values for 1..6 components", worst, 1e-9)


def test_04_markov_invariance():
    worst = 0.0
    for name in ("type1", "type2", "type3", "r232"):
        s = catalog_enhancement(name, 0.3)
        rng = np.random.default_rng(40)
        for _ in range(100):
            b = _sampled_braid(rng, 2, 5, 12)
            worst = max(worst, markov_check(s, b, trials=2, seed=int(rng.integers(1 << 31))))
    _report(4, "markov moves fix the invariant", worst, 1e-9)


def test_05_skein_relations():
    parameters = {"type1": (1.0, 1.0), "type3": (1.0, SQ2), "r232": (1.0, SQ2)}
    worst = 0.0
    for name, (x, y) in parameters.items():
        s = catalog_enhancement(name, 0.55)
        rng = np.random.default_rng(50)
        for _ in range(200):
            worst = max(worst, skein_check(s, _sampled_braid(rng, 2, 4, 12), x, y))
    _report(5, "three-term crossing relations", worst, 1e-9)


def test_06_type2_quartic_relation():
    s = catalog_enhancement("type2", 0.65)
    rng = np.random.default_rng(60)
    worst = 0.0
    for _ in range(200):
        worst = max(worst, quartic_check_type2(s, _sampled_braid(rng, 2, 4, 12)))
    for name, value in (("hopf+", 0.0), ("hopf-", 0.0), ("trefoil", 4.0), ("figure8", 4.0)):
        got = trace_invariant(s, LINKS[name].braid).value
        worst = max(worst, abs(got - value))
    _report(6, "type2 four-term relation and link values", worst, 1e-9)


def test_07_split_union_multiplicativity():
    worst = 0.0
    for name in ("type1", "type2", "type3", "r232"):
        s = catalog_enhancement(name, 0.45)
        rng = np.random.default_rng(70)
        for _ in range(100):
            b1 = _sampled_braid(rng, 1, 3, 8)
            b2 = _sampled_braid(rng, 1, 3, 8)
            worst = max(worst, multiplicativity_check(s, b1, b2))
            tilde12 = multiplicative_invariant(s, juxtapose(b1, b2)).value
            t1 = multiplicative_invariant(s, b1).value
            t2 = multiplicative_invariant(s, b2).value
            worst = max(worst, abs(tilde12 - t1 * t2))
    _report(7, "split unions multiply", worst, 1e-9)


def test_08_cross_operator_agreement():
    s3 = catalog_enhancement("type3", 0.0)
    s232 = catalog_enhancement("r232")
    rng = np.random.default_rng(80)
    worst = 0.0
    for _ in range(100):
        worst = max(worst, cross_operator_check(_sampled_braid(rng, 2, 4, 12), s3=s3, s232=s232))
    for link in LINKS.values():
        worst = max(worst, cross_operator_check(link.braid, s3=s3, s232=s232))
    _report(8, "quarter of type3 equals r232", worst, 1e-9)


def test_09_dense_oracle_agreement():
    ops = [build_operator(name, 0.7) for name in FAMILY_BUILDERS] + [build_r232()]
    worst = 0.0
    for op in ops:
        for n in (2, 3):
            ctx = make_context(op, n)
            b = random_braid(n, 8, seed=90)
            dense = dense_representation(ctx, b)
            for col in range(ctx.dim):
                e = np.zeros(ctx.dim)
                e[col] = 1.0
                worst = max(worst, float(np.max(np.abs(rep_apply(ctx, b, e) - dense[:, col]))))
            worst = max(worst, abs(trace_with_weight(ctx, b) - np.trace(dense)))
    _report(9, "matrix-free path matches the dense oracle", worst, 1e-12)


def test_10_regression_values():
    worst = 0.0
    for theta in (0.0, 0.9):
        s = catalog_enhancement("type1", theta)
        worst = max(worst, abs(trace_invariant(s, LINKS["hopf+"].braid).value - (-4.0)))
        worst = max(worst, abs(trace_invariant(s, LINKS["trefoil"].braid).value - (-8.0)))
    for theta in THETA_GRID:
        worst = max(worst, abs(np.trace(build_type1(theta).r) - 4 * ALPHA))
        worst = max(worst, abs(np.trace(build_type2(theta).r) - 4 * ALPHA))
        worst = max(worst, abs(np.trace(build_type3(theta).r) - 4 * SQ2))
    _report(10, "pinned values and theta-independent traces", worst, 1e-12)


def test_11_performance():
    s = catalog_enhancement("type1", 0.0)
    t0 = time.perf_counter()
    trace_invariant(s, random_braid(8, 20, seed=110))
    t8 = time.perf_counter() - t0
    t0 = time.perf_counter()
    trace_invariant(s, random_braid(10, 20, seed=111))
    t10 = time.perf_counter() - t0
    ok = t8 < 2.0 and t10 < 30.0
    print(f"acceptance 11 evaluation speed: {'PASS' if ok else 'FAIL'} "
          f"(8 strands {t8:.3f}s < 2s, 10 strands {t10:.3f}s < 30s)")
    assert ok, f"timings 8 strands {t8:.3f}s, 10 strands {t10:.3f}s"
