"""Acceptance gate: one test group per criterion, each at its stated tolerance.

A summary line per criterion is printed at the end of the pytest run.
"""
import numpy as np
import pytest

from seasmooth import median as med
from seasmooth.peaks import Side, count_peaks, decide_side, trim_explicit, trim_zero_runs
from seasmooth.pipeline import PipelineConfig, SmootherSpec, TrimSpec, run_pipeline
from seasmooth.series import Series, reverse
from seasmooth.smoothing import (
    ea,
    ea_closed_form,
    ma_centered,
    ma_centered_recursive,
    ma_general,
    rea,
    sea,
)
from seasmooth.synth import FourierSquare, gen_fourier_square, synthetic_scan

ALPHAS = np.round(np.arange(1, 20) * 0.05, 2)
SEED = 750


def random_series(rng, count, n, lo=-10.0, hi=10.0):
    return [rng.uniform(lo, hi, n) for _ in range(count)]


def criterion(num, title):
    return pytest.mark.criterion(num, title)


# 1 -----------------------------------------------------------------------

C1 = criterion(1, "oracle equivalence: ea vs closed form, recursive vs direct MA")


@C1
def test_c1_ea_matches_closed_form():
    worst = 0.0
    for v in random_series(np.random.default_rng(SEED), 100, 750):
        tol = 1e-9 * (1 + np.abs(v).max())
        for a in ALPHAS:
            dev = np.abs(ea(v, a).values - ea_closed_form(v, a).values).max()
            worst = max(worst, dev / tol)
    assert worst <= 1.0, f"worst deviation {worst:.3g} x tolerance"


@C1
@pytest.mark.parametrize("ell", [1, 10, 50])
def test_c1_recursive_ma_matches_direct(ell):
    for v in random_series(np.random.default_rng(SEED + ell), 100, 750):
        a = ma_centered(v, ell).values
        b = ma_centered_recursive(v, ell).values
        assert a.shape == b.shape
        np.testing.assert_allclose(b, a, rtol=0, atol=1e-9 * (1 + np.abs(v).max()))


# 2 -----------------------------------------------------------------------

C2 = criterion(2, "limit cases exact to 1e-12")
LIMIT_LENGTHS = [1, 2, 3, 10, 101, 750]


@C2
@pytest.mark.parametrize("n", LIMIT_LENGTHS)
def test_c2_exponential_limits(n):
    v = np.random.default_rng(n).uniform(-10, 10, n)
    for fn in (ea, rea, sea):
        np.testing.assert_allclose(fn(v, 1.0).values, v, rtol=0, atol=1e-12)
    np.testing.assert_allclose(ea(v, 0.0).values, v[0], rtol=0, atol=1e-12)
    np.testing.assert_allclose(rea(v, 0.0).values, v[-1], rtol=0, atol=1e-12)
    np.testing.assert_allclose(sea(v, 0.0).values, (v[0] + v[-1]) / 2, rtol=0, atol=1e-12)


@C2
@pytest.mark.parametrize("n", LIMIT_LENGTHS)
def test_c2_moving_average_limits(n):
    v = np.random.default_rng(n + 1).uniform(-10, 10, n)
    for fn in (ma_centered, ma_centered_recursive):
        np.testing.assert_allclose(fn(v, 0).values, v, rtol=0, atol=1e-12)
    if n % 2:
        ell = (n - 1) // 2
        for fn in (ma_centered, ma_centered_recursive):
            out = fn(v, ell)
            assert len(out) == 1
            assert abs(out[0] - v.mean()) <= 1e-12
    full = ma_general(v, n - 1, (n - 1) // 2)
    assert len(full) == 1 and abs(full[0] - v.mean()) <= 1e-12


# 3 -----------------------------------------------------------------------

C3 = criterion(3, "reversal equivariance and palindrome symmetry within 1e-12")


@C3
def test_c3_sea_reversal():
    rng = np.random.default_rng(SEED + 3)
    for v in random_series(rng, 100, 750):
        a = rng.choice(ALPHAS)
        lhs = sea(reverse(v), a).values
        rhs = reverse(sea(v, a)).values
        np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12)


@C3
def test_c3_palindromes():
    rng = np.random.default_rng(SEED + 4)
    for k in range(100):
        half = rng.uniform(-10, 10, int(rng.integers(1, 400)))
        v = np.concatenate((half, half[::-1][k % 2:]))
        out = sea(v, rng.choice(ALPHAS)).values
        np.testing.assert_allclose(out, out[::-1], rtol=0, atol=1e-12)
        ell = int(rng.integers(0, (len(v) - 1) // 2 + 1))
        for fn in (ma_centered, ma_centered_recursive):
            out = fn(v, ell).values
            np.testing.assert_allclose(out, out[::-1], rtol=0, atol=1e-12)


# 4 -----------------------------------------------------------------------

C4 = criterion(4, "Gibbs overshoot in [1.17, 1.19]; SEA leaves one extremum per plateau")


@C4
@pytest.mark.parametrize("spp", [200, 256, 400, 1000])
def test_c4_overshoot(spp):
    y = gen_fourier_square(FourierSquare(order=10, n_samples=4 * spp, periods=4))
    assert 1.17 <= y.values.max() <= 1.19
    assert -1.19 <= y.values.min() <= -1.17


def _extrema_per_plateau(y: Series, spp: int, periods: int):
    """(maxima, minima) counts per half period; plateau 2m is positive."""
    maxima = np.zeros(2 * periods, int)
    minima = np.zeros(2 * periods, int)
    half = spp / 2
    for i in count_peaks(y).peak_indices:
        maxima[int(i // half)] += 1
    for i in count_peaks(-y.values).peak_indices:
        minima[int(i // half)] += 1
    return maxima, minima


@C4
@pytest.mark.parametrize("spp", [200, 256, 400, 512])
def test_c4_sea_removes_ripple(spp):
    periods = 4
    y = gen_fourier_square(FourierSquare(order=10, n_samples=periods * spp, periods=periods))
    raw_max, _ = _extrema_per_plateau(y, spp, periods)
    assert raw_max[::2].min() > 1  # ripple present before smoothing
    maxima, minima = _extrema_per_plateau(sea(y, 1 / 40), spp, periods)
    assert maxima.tolist() == [1, 0] * periods
    assert minima.tolist() == [0, 1] * periods


# 5 -----------------------------------------------------------------------

C5 = criterion(5, "phase: SEA extrema within 2 samples, EA right and rEA left by >= 3")


def _phase_shifts():
    n, period, alpha = 1024, 256, 1 / 40
    y = np.sin(2 * np.pi * np.arange(n) / period)
    ref = count_peaks(y).peak_indices
    # skip peaks still inside the start-up transient of either one-sided pass
    settle = int(4 / alpha)
    interior = [p for p in ref if settle <= p < n - settle]
    assert interior, "no interior peaks"
    shifts = {}
    for name, fn in (("sea", sea), ("ea", ea), ("rea", rea)):
        found = count_peaks(fn(y, alpha)).peak_indices
        shifts[name] = [min(found, key=lambda q: abs(q - p)) - p for p in interior]
    return shifts


@C5
def test_c5_sea_keeps_extrema():
    assert all(abs(d) <= 2 for d in _phase_shifts()["sea"])


@C5
def test_c5_one_sided_passes_shift():
    s = _phase_shifts()
    assert all(d >= 3 for d in s["ea"])
    assert all(d <= -3 for d in s["rea"])


# 6 -----------------------------------------------------------------------

C6 = criterion(6, "moving median removes clusters of k <= 4; minimal glide 3 and 9")


def _clustered(rng, k, n=400, magnitude=20.0, gap_extra=6):
    """Base noise in [-1, 1] with k-clusters separated by >= 2k+1 clean samples."""
    v = rng.uniform(-1, 1, n)
    mask = np.zeros(n, bool)
    pos = int(rng.integers(0, 2 * k + 1))
    while pos + k <= n:
        mask[pos:pos + k] = True
        pos += k + 2 * k + 1 + int(rng.integers(0, gap_extra))
    sign = rng.choice([-1.0, 1.0])
    v[mask] += sign * magnitude
    return v, mask


@C6
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_c6_median_clears_clusters(k):
    rng = np.random.default_rng(SEED + 10 * k)
    magnitude = 20.0
    for _ in range(50):
        v, mask = _clustered(rng, k, magnitude=magnitude)
        out = med.moving_median(v, k).values
        assert len(out) == len(v) - 2 * k
        assert np.abs(out).max() < 0.5 * magnitude
        assert med.minimal_glide_length(mask) <= 2 * k + 1


@C6
def test_c6_minimal_glide_values():
    rng = np.random.default_rng(SEED + 6)
    for _ in range(50):
        _, isolated = _clustered(rng, 1, gap_extra=10)
        assert med.minimal_glide_length(isolated) == 3
        _, fours = _clustered(rng, 4, gap_extra=10)
        assert med.minimal_glide_length(fours) == 9
    one = np.zeros(30, bool)
    one[12] = True
    assert med.minimal_glide_length(one) == 3
    four = np.zeros(30, bool)
    four[10:14] = True
    assert med.minimal_glide_length(four) == 9


# 7 -----------------------------------------------------------------------

C7 = criterion(7, "end-to-end: 14 teeth, coarse side; raw scan overcounts")


@C7
def test_c7_tooth_count():
    scan = synthetic_scan()
    assert scan.outlier_mask.sum() == 4
    assert len(scan.artifacts.tooth_indices) == 3
    cfg = PipelineConfig(
        trim=TrimSpec("auto"),
        median_glide=9,
        smoother=SmootherSpec("sea", glide=20),
        prominence=0.0,
        expected_coarse=14,
        expected_fine=28,
        tolerance=1,
    )
    result = run_pipeline(scan.series, cfg)
    assert result.report.count == 14
    assert result.decision.verdict is Side.COARSE
    assert decide_side(result.report, 14, 28, 1).verdict is Side.COARSE
    assert count_peaks(scan.series).count > 14


# 8 -----------------------------------------------------------------------

C8 = criterion(8, "length and trim conservation contracts")


@C8
def test_c8_window_lengths():
    rng = np.random.default_rng(SEED + 8)
    for _ in range(500):
        N = int(rng.integers(1, 120))
        v = rng.uniform(-10, 10, N)
        ell = int(rng.integers(0, (N - 1) // 2 + 1))
        for fn in (ma_centered, ma_centered_recursive, med.moving_median):
            out = fn(Series(v, offset=3), ell)
            assert len(out) == N - 2 * ell and out.offset == 3 + ell
        n = int(rng.integers(0, N))
        assert len(ma_general(v, n, int(rng.integers(0, n + 1)))) == N - n
        a = float(rng.uniform(0, 1))
        for fn in (ea, rea, sea):
            assert len(fn(v, a)) == N


@C8
def test_c8_trim_conservation():
    rng = np.random.default_rng(SEED + 9)
    for _ in range(500):
        N = int(rng.integers(1, 80))
        v = rng.uniform(1, 5, N)
        lead, tail = (int(rng.integers(0, N + 1)) for _ in range(2))
        v[:lead] = rng.uniform(-0.05, 0.05, lead)
        if tail:
            v[N - tail:] = rng.uniform(-0.05, 0.05, min(tail, N))
        r = trim_zero_runs(v, 0.1)
        kept = 0 if r.trimmed is None else len(r.trimmed)
        assert r.prefix_len + kept + r.suffix_len == N
        if r.trimmed is not None:
            assert r.trimmed.offset == r.prefix_len
        p = int(rng.integers(0, N + 1))
        s = int(rng.integers(0, N - p + 1))
        e = trim_explicit(v, p, s)
        kept = 0 if e.trimmed is None else len(e.trimmed)
        assert e.prefix_len + kept + e.suffix_len == N
