"""Embedded oracle suite: independent re-derivations of the core transforms.

Each check recomputes expected values through a deliberately separate route
(scalar brute force, direct O(N^2) DFT, arctangent geometry) and compares the
library's vectorized output against it.  `run_checks` returns one result per
property; the CLI prints them and exits nonzero on any failure.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import rp
from .image import MixupParams, mixup_blend, normalize_channel

DFT_RELATIVE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _within_one_ulp(actual: np.ndarray, expected: np.ndarray) -> bool:
    actual = np.asarray(actual, dtype=np.float64)
    expected = np.asarray(expected, dtype=np.float64)
    if actual.shape != expected.shape:
        return False
    tol = np.spacing(np.maximum(np.abs(actual), np.abs(expected)))
    return bool(np.all(np.abs(actual - expected) <= tol))


# ---------------------------------------------------------------------------
# independent oracles


def _oracle_sign(dx: float, dy: float) -> float:
    """Arctangent-based sign rule: angle of (dx, dy) to (1, 1) vs 3*pi/4."""
    if dx == 0.0 and dy == 0.0:
        return 1.0
    angle = abs(math.atan2(dy, dx) - math.atan2(1.0, 1.0))
    if angle > math.pi:
        angle = 2.0 * math.pi - angle
    return -1.0 if angle > 0.75 * math.pi else 1.0


def _oracle_signed_matrix(states) -> np.ndarray:
    """Scalar per-pair signed distances, no vectorization shared with rp.py."""
    m = len(states)
    out = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            dx = states[i][0] - states[j][0]
            dy = states[i][1] - states[j][1]
            dist = math.sqrt(dx * dx + dy * dy)
            out[i, j] = _oracle_sign(dx, dy) * dist
    return out


def _oracle_unsigned_matrix(states) -> np.ndarray:
    return np.abs(_oracle_signed_matrix(states))


def _oracle_dft_phases(window: np.ndarray, magnitude_floor: float) -> np.ndarray:
    """Direct O(N^2) DFT via the definition, independent of np.fft."""
    n = window.shape[0]
    k = np.arange(n)
    twiddle = np.exp(-2j * np.pi * np.outer(k, k) / n)
    bins = twiddle @ window.astype(np.complex128)
    mags = np.abs(bins)
    phases = np.arctan2(bins.imag, bins.real)
    phases[phases == -np.pi] = np.pi
    phases[mags <= magnitude_floor * mags.max()] = 0.0
    return phases


def _circular_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance between angles on the circle; bins straddling the +/-pi cut
    are the same phase."""
    delta = np.abs(a - b)
    return np.minimum(delta, 2.0 * np.pi - delta)


# ---------------------------------------------------------------------------
# checks


def check_golden_unsigned() -> CheckResult:
    got = rp.unsigned_rp(rp.delay_embed([0.0, 1.0, 0.0]))
    want = _oracle_unsigned_matrix([(0.0, 1.0), (1.0, 0.0)])
    root2 = math.sqrt(2.0)
    ok = (
        _within_one_ulp(got, want)
        and got[0, 1] == root2
        and got[1, 0] == root2
        and got[0, 0] == 0.0
    )
    return CheckResult("golden-unsigned-rp", ok, f"[0,1,0] off-diagonal {got[0, 1]!r}")


def check_golden_signed_temporal() -> CheckResult:
    got = rp.modified_rp_temporal(rp.delay_embed([0.0, 1.0, 2.0]))
    want = _oracle_signed_matrix([(0.0, 1.0), (1.0, 2.0)])
    root2 = math.sqrt(2.0)
    ok = (
        _within_one_ulp(got, want)
        and got[0, 1] == -root2
        and got[1, 0] == root2
    )
    flat = rp.modified_rp_temporal(rp.delay_embed([0.0, 1.0, 0.0]))
    ok = ok and flat[0, 1] == root2 and flat[1, 0] == root2
    return CheckResult(
        "golden-signed-temporal-rp", ok, f"[0,1,2] upper {got[0, 1]!r}, lower {got[1, 0]!r}"
    )


def check_golden_frequency() -> CheckResult:
    phases = np.array([0.0, -math.pi / 2.0, math.pi, math.pi / 2.0])
    got = rp.modified_rp_frequency(phases)
    want = _oracle_signed_matrix(
        [
            (0.0, -math.pi / 2.0),
            (-math.pi / 2.0, math.pi),
            (math.pi, math.pi / 2.0),
        ]
    )
    ok = _within_one_ulp(got, want) and got[0, 2] < 0.0 and got[2, 0] > 0.0
    spectrum_ok = _within_one_ulp(
        rp.phase_spectrum([0.0, 1.0, 0.0, 0.0]), phases
    )
    return CheckResult(
        "golden-frequency-rp",
        ok and spectrum_ok,
        f"phase-sequence matrix corner {got[0, 2]!r}",
    )


def check_dft_phase_oracle(n_windows: int = 250, seed: int = 0xD0F7) -> CheckResult:
    # Relative error is ill-posed where the true phase is ~0 (real-valued
    # bins such as DC and Nyquist carry O(eps) noise in any implementation),
    # so the comparison carries an absolute floor of the same 1e-9 scale.
    rng = np.random.default_rng(seed)
    worst_rel = 0.0
    worst_margin = 0.0
    floor = rp.DEFAULT_MAGNITUDE_FLOOR
    for _ in range(n_windows):
        n = int(rng.integers(4, 257))
        window = rng.uniform(-1.0, 1.0, size=n)
        got = rp.phase_spectrum(window, floor)
        want = _oracle_dft_phases(window, floor)
        mags = np.abs(np.fft.fft(window))
        live = mags > floor * mags.max()
        dist = _circular_distance(got[live], want[live])
        ref = np.abs(want[live])
        margin = dist / (DFT_RELATIVE_TOLERANCE + DFT_RELATIVE_TOLERANCE * ref)
        worst_margin = max(worst_margin, float(margin.max()))
        conditioned = ref > 1e-2
        if conditioned.any():
            worst_rel = max(worst_rel, float((dist[conditioned] / ref[conditioned]).max()))
    ok = worst_margin <= 1.0 and worst_rel <= DFT_RELATIVE_TOLERANCE
    return CheckResult(
        "dft-phase-oracle",
        ok,
        f"max relative phase error {worst_rel:.3e} over {n_windows} windows",
    )


def check_sign_rule_oracle(n_samples: int = 20000, seed: int = 0x5163) -> CheckResult:
    rng = np.random.default_rng(seed)
    diffs = rng.uniform(-1.0, 1.0, size=(n_samples, 2))
    failures = 0
    for dx, dy in diffs:
        got = rp.sign_of((dx, dy))
        if got != _oracle_sign(dx, dy):
            failures += 1
            continue
        # flip-product rule: -1 exactly when the angle to v leaves [pi/4, 3pi/4]
        angle = abs(math.atan2(dy, dx) - math.atan2(1.0, 1.0))
        if angle > math.pi:
            angle = 2.0 * math.pi - angle
        product = got * rp.sign_of((-dx, -dy))
        expected = -1.0 if (angle > 0.75 * math.pi or angle < 0.25 * math.pi) else 1.0
        if product != expected:
            failures += 1
    ok = failures == 0
    return CheckResult(
        "sign-rule-oracle", ok, f"{failures} mismatches over {n_samples} samples"
    )


def check_structural_invariants(n_trajectories: int = 300, seed: int = 0x57A7) -> CheckResult:
    rng = np.random.default_rng(seed)
    violations = []
    for _ in range(n_trajectories):
        n = int(rng.integers(3, 40))
        window = rng.normal(0.0, 1.0, size=n)
        states = rp.delay_embed(window)
        unsigned = rp.unsigned_rp(states)
        signed = rp.modified_rp_temporal(states)
        if np.any(np.diag(signed) != 0.0) or np.any(np.diag(unsigned) != 0.0):
            violations.append("nonzero diagonal")
        if not np.array_equal(unsigned, unsigned.T) or np.any(unsigned < 0.0):
            violations.append("unsigned not symmetric non-negative")
        if not np.array_equal(np.abs(signed), unsigned):
            violations.append("|signed| != unsigned")
        if not np.array_equal(np.abs(signed), np.abs(signed).T):
            violations.append("magnitude symmetry broken")
        if np.any((signed < 0.0) & (signed.T < 0.0)):
            violations.append("sign flip rule broken")
        phases = rp.phase_spectrum(window)
        via_frequency = rp.modified_rp_frequency(phases)
        via_temporal = rp.modified_rp_temporal(rp.delay_embed(phases))
        if not np.array_equal(via_frequency, via_temporal):
            violations.append("frequency path != temporal path on phases")
        if violations:
            break
    ok = not violations
    detail = violations[0] if violations else f"{n_trajectories} trajectories clean"
    return CheckResult("structural-invariants", ok, detail)


def check_mixup_endpoints(seed: int = 0x317) -> CheckResult:
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 256, size=(9, 9, 3)).astype(np.uint8)
    b = rng.integers(0, 256, size=(9, 9, 3)).astype(np.uint8)
    one, _ = mixup_blend(a, b, MixupParams(mode="fixed", fixed_lambda=1.0))
    zero, _ = mixup_blend(a, b, MixupParams(mode="fixed", fixed_lambda=0.0))
    first, lam1 = mixup_blend(a, b, MixupParams(seed=123))
    second, lam2 = mixup_blend(a, b, MixupParams(seed=123))
    ok = (
        np.array_equal(one, a)
        and np.array_equal(zero, b)
        and lam1 == lam2
        and np.array_equal(first, second)
    )
    return CheckResult("mixup-endpoints", ok, f"lambda replay {lam1:.6f}")


def check_normalization_affine(seed: int = 0xAFF1) -> CheckResult:
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(200):
        m = rng.normal(0.0, 3.0, size=(7, 7))
        a = float(rng.uniform(0.1, 10.0))
        b = float(rng.uniform(-5.0, 5.0))
        if not np.array_equal(normalize_channel(m), normalize_channel(a * m + b)):
            failures += 1
    ok = failures == 0
    return CheckResult("normalization-affine-invariance", ok, f"{failures} failures over 200 draws")


def run_checks() -> list:
    return [
        check_golden_unsigned(),
        check_golden_signed_temporal(),
        check_golden_frequency(),
        check_dft_phase_oracle(),
        check_sign_rule_oracle(),
        check_structural_invariants(),
        check_mixup_endpoints(),
        check_normalization_affine(),
    ]
