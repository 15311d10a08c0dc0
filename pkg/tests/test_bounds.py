"""Asymptotic bound machinery: entropy roots, exponent branches, exact remark."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from wgc.bounds import (
    BoundPoint,
    BracketError,
    DomainError,
    OutOfModelError,
    binary_entropy,
    costello_delta,
    costello_exponent,
    curves_csv,
    emit_curves,
    fhat,
    gamma_opt_block,
    mu_gamma_optimizers,
    rate_gap,
    remark_counterexample,
    remark_probabilities,
    vg_delta,
    woven_vg_bound,
)

mpmath.mp.dps = 50


def mp_entropy(x):
    x = mpmath.mpf(x)
    return -x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2)


def mp_vg_delta(rate) -> float:
    root = mpmath.findroot(
        lambda d: mp_entropy(d) + rate - 1,
        (mpmath.mpf("1e-30"), mpmath.mpf("0.5")),
        solver="bisect",
        tol=mpmath.mpf("1e-40"),
    )
    return float(root)


def mp_costello_delta(rate) -> float:
    r = mpmath.mpf(rate)
    return float(-r / mpmath.log(2 ** (1 - r) - 1, 2))


# ---------------------------------------------------------------------------
# entropy


def test_entropy_reference_points():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert abs(binary_entropy(0.11) - float(mp_entropy(0.11))) < 1e-14


def test_entropy_symmetry_and_domain():
    for x in (0.01, 0.2, 0.37, 0.49):
        assert abs(binary_entropy(x) - binary_entropy(1 - x)) < 1e-15
    with pytest.raises(DomainError):
        binary_entropy(-0.1)
    with pytest.raises(DomainError):
        binary_entropy(1.1)


# ---------------------------------------------------------------------------
# entropy root


def test_vg_delta_reference_values():
    assert abs(vg_delta(1.0 / 3.0) - 0.1740) < 1e-3
    assert abs(vg_delta(0.5) - 0.1100) < 1e-3
    for rate in (1.0 / 3.0, 0.5, 0.9):
        assert abs(vg_delta(rate) - mp_vg_delta(rate)) < 1e-9


def test_vg_delta_low_rate_limit():
    assert abs(vg_delta(1e-9) - 0.5) < 1e-4
    with pytest.raises(DomainError):
        vg_delta(0.0)
    with pytest.raises(DomainError):
        vg_delta(1.0)


# ---------------------------------------------------------------------------
# exponent function


def test_fhat_zero_at_entropy_root_in_vg_regime():
    # s = 10 puts every mid rate in the saturated-optimizer regime
    for rate in (0.2, 0.5, 0.8):
        point = woven_vg_bound(rate, 10)
        assert point.regime == "vg"
        assert abs(fhat(point.delta, rate, 10)) < 1e-9


def test_fhat_branches_continuous_at_boundary():
    for s in (2, 3, 4, 10):
        for rate in (0.1, 0.3, 0.5, 0.7, 0.9):
            boundary = 1.0 - 2.0 ** ((rate - 1.0) / s)
            eps = 1e-9
            left = fhat(boundary - eps, rate, s)
            right = fhat(boundary + eps, rate, s)
            assert abs(left - right) < 1e-6


def test_fhat_matches_direct_optimizer_evaluation():
    # evaluating the pre-optimization exponent at gamma_opt reproduces fhat
    import math

    def raw_exponent(delta, rate, s, gamma):
        return ((1 - s) * binary_entropy(delta)
                - (1 - rate) * gamma + s * gamma * binary_entropy(delta / gamma))

    for s in (2, 3, 4):
        for rate in (0.25, 0.5, 0.75):
            for delta in (0.02, 0.1, 0.2, 0.3):
                gamma = gamma_opt_block(delta, rate, s)
                if delta / gamma > 1:
                    continue
                assert abs(fhat(delta, rate, s) - raw_exponent(delta, rate, s, gamma)) < 1e-9


def test_fhat_domain_checks():
    with pytest.raises(DomainError):
        fhat(0.0, 0.5, 2)
    with pytest.raises(DomainError):
        fhat(0.2, 0.5, 1)


# ---------------------------------------------------------------------------
# regime selection


def test_regime_vg_everywhere_for_large_s():
    rate = 0.05
    while rate < 0.96:
        point = woven_vg_bound(rate, 10)
        assert point.regime == "vg"
        assert abs(point.delta - vg_delta(rate)) < 1e-6
        rate += 0.05


def test_regime_graph_limited_high_rate_small_s():
    point = woven_vg_bound(0.95, 2)
    assert point.regime == "graph-limited"
    assert point.delta < vg_delta(0.95)


def test_bound_never_exceeds_entropy_root():
    for s in (2, 3, 4, 10):
        rate = 0.05
        while rate < 0.99:
            point = woven_vg_bound(rate, s)
            assert point.delta <= vg_delta(rate) + 1e-9
            if point.regime == "vg":
                assert abs(point.delta - vg_delta(rate)) < 1e-9
            rate += 0.05


def test_root_certificates_on_grid():
    for s in (2, 3, 4, 10):
        rate = 0.01
        while rate < 1.0 - 1e-9:
            point = woven_vg_bound(rate, s)
            assert abs(fhat(point.delta, rate, s)) < 1e-9
            rate += 0.01


def test_rate_gap_monotone_in_s():
    for delta in (0.05, 0.1, 0.2):
        gaps = [rate_gap(delta, s) for s in (2, 3, 4, 10)]
        assert all(g >= -1e-12 for g in gaps)
        assert all(a >= b - 1e-9 for a, b in zip(gaps, gaps[1:]))


# ---------------------------------------------------------------------------
# free-distance bound


def test_costello_reference_values():
    assert abs(costello_delta(1.0 / 3.0) - 0.4343) < 1e-3
    assert abs(costello_delta(0.5) - 0.3932) < 1e-3
    for rate in (1.0 / 3.0, 0.5, 0.8):
        assert abs(costello_delta(rate) - mp_costello_delta(rate)) < 1e-12


def test_costello_low_rate_limit():
    # the denominator tends to log2(1) = 0 together with the numerator;
    # the true limit is 1/2 (confirmed against the high-precision oracle)
    assert abs(costello_delta(1e-6) - 0.5) < 1e-4
    assert abs(costello_delta(1e-6) - mp_costello_delta(1e-6)) < 1e-9


def test_costello_exponent_root_identity():
    for rate in (0.2, 1.0 / 3.0, 0.5, 0.7):
        delta = costello_delta(rate)
        assert abs(costello_exponent(delta, rate)) < 1e-9


def test_costello_above_vg_on_grid():
    rate = 0.05
    while rate < 0.95:
        assert costello_delta(rate) > vg_delta(rate)
        rate += 0.01


def test_mu_gamma_optimizers():
    rate = 0.5
    delta = costello_delta(rate)
    gamma, mu = mu_gamma_optimizers(delta, rate, 2)
    assert mu > 0
    assert 0 < gamma <= 1.0
    # large s saturates the active fraction
    saturated = [mu_gamma_optimizers(delta, rate, s)[0] for s in (2, 4, 8, 16, 64)]
    assert saturated[-1] == 1.0
    assert all(a <= b + 1e-12 for a, b in zip(saturated, saturated[1:]))


def test_mu_opt_negative_is_out_of_model():
    rate = 0.5
    low_delta = 0.5 * (1.0 - 2.0 ** (rate - 1.0))
    with pytest.raises(OutOfModelError):
        mu_gamma_optimizers(low_delta, rate, 2)


# ---------------------------------------------------------------------------
# exhaustive remark


def test_remark_exact_probabilities():
    identical, independent = remark_counterexample()
    assert identical == Fraction(3, 8)
    assert independent == Fraction(1, 4)
    assert identical > independent


def test_remark_weight_two_case():
    identical, independent = remark_probabilities(weight=2)
    # independent hand enumeration: syndrome zero iff both heads agree
    assert identical == Fraction(1, 2)
    assert independent == Fraction(1, 4)


# ---------------------------------------------------------------------------
# curves


def test_emit_curves_vg_monotone():
    rows = emit_curves([2, 3, 4, 10], 0.01, "vg")
    by_s: dict[int, list] = {}
    for row in rows:
        by_s.setdefault(row["s"], []).append(row)
    assert set(by_s) == {2, 3, 4, 10}
    for s, pts in by_s.items():
        deltas = [p["delta"] for p in pts]
        assert all(isinstance(d, float) for d in deltas)
        assert all(a >= b - 1e-12 for a, b in zip(deltas, deltas[1:]))


def test_emit_curves_costello_value():
    rows = emit_curves([], 0.01, "costello")
    near_half = min(rows, key=lambda r: abs(r["rate"] - 0.5))
    assert abs(near_half["delta"] - 0.3932) < 1e-3


def test_emit_curves_empty_s_list():
    assert emit_curves([], 0.01, "vg") == []


def test_emit_curves_rejects_bad_step():
    with pytest.raises(DomainError):
        emit_curves([2], 0.5, "vg")


def test_curves_csv_formatting():
    rows = emit_curves([2], 0.1, "vg")
    text = curves_csv(rows)
    lines = text.strip().splitlines()
    assert lines[0] == "s,rate,delta,regime"
    assert len(lines) == len(rows) + 1
