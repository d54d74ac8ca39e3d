"""Certification pipeline: alpha scans, minimum location, and the
closed-form inequality chains that pin the unique minimum of
lambda1(alpha) at alpha = 0 for even k.

Certificates are pure arithmetic on the bounds module (no PDE solves),
mirroring how the proof actually runs: the scan and identity layers are
a separate, optional evidence channel.  The split is k <= 68 (harmonic
comparison floor B_k) versus k >= 70 (step-well floor B~_k).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from . import bounds, identities
from .eigensolver import (
    GridSpec,
    assemble_hamiltonian,
    refined_lowest_eigenvalues,
    solve,
    truncation_radius,
)
from .errors import SolverFailure
from .operators import MontgomeryPotential, OperatorSpec
from .optimize import minimize_golden

# Every certified inequality must clear this relative margin, guarding
# against rounding flips without interval arithmetic.
REL_MARGIN_FLOOR = 1e-9

# Scan ceiling: covers both the 3/2 (small k) and 2.83 (large k)
# exclusion thresholds with room to spare.
ALPHA_SCAN_MAX = 3.0

_SMALL_K_MAX = 68
_LARGE_K_MIN = 70

FIGURE_KINDS = ("lambda1comp", "completeproof")


class Regime(Enum):
    SMALL_K = "small"
    LARGE_K = "large"


@dataclass(frozen=True)
class ScanRow:
    """One alpha sample of the first two eigenvalues."""

    alpha: float
    lambda1: float
    lambda2: float
    d_lambda1: float
    gap_ok: bool

    def __post_init__(self):
        if not self.lambda1 < self.lambda2:
            raise ValueError("scan row lost eigenvalue ordering")


@dataclass(frozen=True)
class CertCheck:
    """One strict inequality lhs > rhs with its relative margin."""

    name: str
    lhs: float
    rhs: float

    @property
    def rel_margin(self) -> float:
        return (self.lhs - self.rhs) / max(abs(self.lhs), abs(self.rhs), 1e-30)

    @property
    def passed(self) -> bool:
        return self.rel_margin > REL_MARGIN_FLOOR


@dataclass(frozen=True)
class CertificateReport:
    """Pass/fail of every inequality in one regime's chain for one k."""

    k: int
    regime: Regime
    checks: Tuple[CertCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def scan(k: int, alpha_min: float, alpha_max: float, steps: int,
         tol: float = 1e-8) -> List[ScanRow]:
    """Uniformly sampled (lambda1, lambda2, d lambda1) over an alpha range.

    Each row comes from a converged adaptive solve; the derivative column
    is the Feynman-Hellmann integral on that solve's grid.  Deterministic.
    """
    if not alpha_min < alpha_max:
        raise ValueError("need alpha_min < alpha_max")
    if steps < 2:
        raise ValueError("need at least 2 steps")
    rows = []
    for i in range(steps):
        alpha = alpha_min + (alpha_max - alpha_min) * i / (steps - 1)
        try:
            res = solve(OperatorSpec(k, alpha), count=2, tol=tol)
        except SolverFailure as exc:
            raise SolverFailure(
                f"scan failed at alpha={alpha}: {exc}",
                best_estimate=exc.best_estimate,
                residual=exc.residual,
            ) from exc
        lam1, lam2 = res.eigenvalues[0], res.eigenvalues[1]
        rows.append(
            ScanRow(
                alpha=alpha,
                lambda1=lam1,
                lambda2=lam2,
                d_lambda1=identities._fh_from_result(res, k, alpha),
                gap_ok=(k + 2.0) / (k + 6.0) * lam2 > lam1,
            )
        )
    return rows


def locate_minimum(k: int, tol: float = 1e-7) -> Tuple[float, float]:
    """(alpha_min, lambda_min) of lambda1(alpha) over [0, 3] for even k.

    Golden-section search; evenness in alpha restricts the bracket to
    alpha >= 0.  All evaluations run on one fixed grid pair sized for the
    whole alpha range, so comparisons see a smooth function of alpha
    instead of per-solve adaptation noise; the discrete problem inherits
    the alpha -> -alpha symmetry exactly, keeping the discrete minimizer
    at 0.  Expected minimizer within 1e-4 of 0.
    """
    if k % 2 != 0:
        raise ValueError("minimum location is only certified for even k")
    # Domain must confine the worst case over the bracket; cap with the
    # trial upper bound at alpha = 3 plus slack.
    cap = max(10.0, 2.0 * (ALPHA_SCAN_MAX**2 + bounds.PI2_OVER_4) + 3.0)
    radius = truncation_radius(MontgomeryPotential(k, ALPHA_SCAN_MAX), cap, 1.0)
    probe = solve(OperatorSpec(k, 0.0), count=1, tol=tol)
    n_fine = probe.grid_used.n

    def lam1(alpha: float) -> float:
        grid = GridSpec(-radius, radius, n_fine)
        coarse = GridSpec(-radius, radius, (n_fine - 1) // 2)
        pot = MontgomeryPotential(k, alpha)
        lam_c, _ = refined_lowest_eigenvalues(assemble_hamiltonian(pot, coarse), 1)
        lam_f, _ = refined_lowest_eigenvalues(assemble_hamiltonian(pot, grid), 1)
        return float(lam_f[0] + (lam_f[0] - lam_c[0]) / 3.0)

    return minimize_golden(lam1, 0.0, ALPHA_SCAN_MAX, xtol=1e-5)


def _small_k_checks(k: int) -> Tuple[CertCheck, ...]:
    a_k = bounds.upper_bound_A(k)
    b_k = bounds.lower_bound_B(k)
    c_k = bounds.lower_bound_C(k)
    gap_floor = (k + 2.0) / (k + 6.0) * b_k
    alpha_star = math.sqrt(gap_floor - a_k) if gap_floor > a_k else math.nan
    alpha_double_star = 1.5 - math.sqrt(c_k - a_k) if c_k > a_k else math.nan
    return (
        CertCheck("critical_point_free_radius", gap_floor, a_k),
        CertCheck("no_global_min_up_to_two_alpha_star", 2.0 * alpha_star, alpha_star),
        CertCheck("large_alpha_floor_exceeds_zero_upper", c_k, a_k),
        CertCheck("exclusion_beyond_alpha_double_star", 1.5, alpha_double_star),
        CertCheck("radii_overlap", 2.0 * alpha_star, alpha_double_star),
    )


def certify_small_k(k: int) -> CertificateReport:
    """Certificate for even 2 <= k <= 68, pure closed-form arithmetic.

    The chain: no critical point in (0, alpha_star); no global minimum in
    [alpha_star, 2 alpha_star); none beyond alpha_double_star; and the
    two intervals overlap (2 alpha_star > alpha_double_star), leaving
    alpha = 0 as the only candidate.
    """
    if not isinstance(k, int) or k % 2 != 0 or not 2 <= k <= _SMALL_K_MAX:
        raise ValueError(f"small-k certificates cover even k in [2, 68], got {k!r}")
    return CertificateReport(k=k, regime=Regime.SMALL_K, checks=_small_k_checks(k))


def _large_k_checks(k: int) -> Tuple[CertCheck, ...]:
    a_k = bounds.upper_bound_A(k)
    b_tilde = bounds.lower_bound_B_tilde(k)
    first_term, second_term = bounds.c_bound_terms(k, alpha0=2.8)
    c_28 = min(first_term, second_term)
    gap_floor = (k + 2.0) / (k + 6.0) * b_tilde
    two_alpha_star = (
        2.0 * math.sqrt(gap_floor - a_k) if gap_floor > a_k else math.nan
    )
    return (
        CertCheck("upper_bound_below_pi2_over_4", bounds.PI2_OVER_4, a_k),
        CertCheck("b_tilde_floor", b_tilde, 4.719),
        CertCheck("two_alpha_star_floor", two_alpha_star, 2.83),
        CertCheck("first_c_term_floor", first_term, 7.76),
        CertCheck("first_c_term_ceiling", 2.8**2, first_term),
        CertCheck("second_c_term_floor", second_term, 21.2),
        CertCheck("large_alpha_floor_exceeds_pi2_over_4", c_28, bounds.PI2_OVER_4),
        CertCheck("exclusion_intervals_overlap", 2.83, 2.8),
    )


def certify_large_k(k: int) -> CertificateReport:
    """Certificate for even k >= 70.

    The chain: A_k stays below pi^2/4; B~_k >= 4.719 makes
    2 alpha_star >= 2.83, so no global minimum sits in (0, 2.83); the
    alpha >= 2.8 floor min((2.8 - 1/(k+1))^2, second term) exceeds
    pi^2/4, so none sits in [2.8, infinity) either; the two exclusions
    overlap.
    """
    if not isinstance(k, int) or k % 2 != 0 or k < _LARGE_K_MIN:
        raise ValueError(f"large-k certificates cover even k >= 70, got {k!r}")
    return CertificateReport(k=k, regime=Regime.LARGE_K, checks=_large_k_checks(k))


def figure_data(which: str) -> List[tuple]:
    """Tables behind the two summary figures, for even k in [2, 68].

      lambda1comp   -> rows (k, A_k, C_k): the alpha = 0 upper bound
                       against the alpha >= 3/2 floor.
      completeproof -> rows (k, 2 alpha_star, alpha_double_star): the
                       exclusion radii whose overlap closes the argument.
    """
    if which not in FIGURE_KINDS:
        raise ValueError(f"unknown figure {which!r}; expected one of {FIGURE_KINDS}")
    rows = []
    for k in range(2, _SMALL_K_MAX + 1, 2):
        if which == "lambda1comp":
            rows.append((k, bounds.upper_bound_A(k), bounds.lower_bound_C(k)))
        else:
            alpha_star, alpha_double_star = bounds.exclusion_radii(k)
            rows.append((k, 2.0 * alpha_star, alpha_double_star))
    return rows


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    return f"{x:.12g}"


def figure_csv(which: str) -> str:
    """CSV rendering of figure_data: 12 significant digits, header row,
    newline-terminated rows."""
    header = {
        "lambda1comp": "k,A_k,C_k",
        "completeproof": "k,two_alpha_star,alpha_double_star",
    }[which]
    lines = [header]
    for row in figure_data(which):
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def scan_csv(rows: List[ScanRow]) -> str:
    """CSV rendering of scan rows (alpha,lambda1,lambda2,d_lambda1,gap_ok)."""
    lines = ["alpha,lambda1,lambda2,d_lambda1,gap_ok"]
    for r in rows:
        lines.append(
            ",".join(
                (_fmt(r.alpha), _fmt(r.lambda1), _fmt(r.lambda2),
                 _fmt(r.d_lambda1), _fmt(r.gap_ok))
            )
        )
    return "\n".join(lines) + "\n"
