"""Closed-form spectral bounds for the Montgomery family and the derived
exclusion radii.

Everything here is plain arithmetic on k (no PDE solves): the variational
upper bound A_k on the bottom eigenvalue at alpha = 0, the commutator
constant h(k), the second-eigenvalue floors B_k and B~_k, the large-alpha
ground floor C_k built on the de Gennes constant, and the radii
alpha_star / alpha_double_star that exclude critical points and global
minima from explicit alpha intervals.

Fractional powers are evaluated in the log domain throughout; k up to a
few hundred exceeds what naive pow chains handle cleanly.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import CertificationError
from .optimize import maximize_golden

# The de Gennes constant enters every certified inequality through this
# floor, not through its computed value (~0.59011); the computed value is
# reported separately for information.
THETA0_LOWER = 0.59

# Fixed barrier position for the B~ bound; deliberately not optimized.
B_TILDE_T = 1.1

PI2_OVER_4 = math.pi**2 / 4.0

_GOLDEN_SIGMA = (math.sqrt(5.0) - 1.0) / 2.0


def _require_even_k(k: int, minimum: int = 2) -> None:
    if not isinstance(k, int) or k < minimum or k % 2 != 0:
        raise ValueError(f"k must be an even integer >= {minimum}, got {k!r}")


def h_closed(a: float) -> float:
    """h(a) = 2^(-4/(a+2)) * a^((a+4)/(a+2)) * (a+1)^(1/(a+2)-1).

    The commutator constant: the optimal Cauchy-Schwarz weight in the
    operator comparison against the half-power model.  h(a) -> 1 as
    a -> infinity.
    """
    if a < 2:
        raise ValueError("h is used for a >= 2")
    e = a + 2.0
    return math.exp(
        -4.0 / e * math.log(2.0)
        + (a + 4.0) / e * math.log(a)
        + (1.0 / e - 1.0) * math.log(a + 1.0)
    )


def h_sigma_expression(a: float, sigma: float) -> float:
    """(1 - sigma^2)^(a/(a+2)) * sigma^(2/(a+2)) * (a/2)^(4/(a+2))."""
    e = a + 2.0
    return math.exp(
        a / e * math.log1p(-sigma * sigma)
        + 2.0 / e * math.log(sigma)
        + 4.0 / e * math.log(a / 2.0)
    )


def _h_max_point(a: float, xtol: float) -> Tuple[float, float]:
    # Golden section locates the flat maximum to ~sqrt(eps); one
    # three-point parabolic step then recovers the vertex to ~1e-10,
    # since the second difference is still well resolved at d = 1e-5.
    f = lambda s: h_sigma_expression(a, s)
    sigma, _ = maximize_golden(f, 1e-12, 1.0 - 1e-12, xtol=xtol)
    d = 1e-5
    lo, mid, hi = f(sigma - d), f(sigma), f(sigma + d)
    curvature = lo - 2.0 * mid + hi
    if curvature < 0.0:
        sigma = sigma + 0.5 * d * (lo - hi) / curvature
    return sigma, f(sigma)


def h_maximized(a: float, xtol: float = 1e-13) -> float:
    """h(a) recomputed by maximizing over sigma in (0, 1).

    Independent route to h_closed; the interior maximizer sits at
    1/sqrt(a+1).  Golden-section to xtol in sigma plus one parabolic
    refinement of the vertex.
    """
    if a < 2:
        raise ValueError("h is used for a >= 2")
    return _h_max_point(a, xtol)[1]


def h_maximizer(a: float, xtol: float = 1e-13) -> float:
    """The maximizing sigma of h_maximized (analytically 1/sqrt(a+1))."""
    if a < 2:
        raise ValueError("h is used for a >= 2")
    return _h_max_point(a, xtol)[0]


# Coefficient of rho^6 in the cos^2 trial-state energy at k = 2, times 7:
# 4 pi^6 - 210 pi^4 + 4410 pi^2 - 26775.
_K2_TRIAL_NUMERATOR = (
    4.0 * math.pi**6 - 210.0 * math.pi**4 + 4410.0 * math.pi**2 - 26775.0
)


def upper_bound_A_k2() -> float:
    """Sharp k=2 upper bound from the compactly supported cos^2 trial state:
    A_2 = (2^(3/2) / 9) * ((4 pi^6 - 210 pi^4 + 4410 pi^2 - 26775) / 7)^(1/4).
    """
    return (2.0**1.5 / 9.0) * (_K2_TRIAL_NUMERATOR / 7.0) ** 0.25


def trial_width_k2() -> float:
    """The trial-state half-width minimizing the k=2 energy (about 2.57)."""
    return 2.0**0.25 * math.pi * (_K2_TRIAL_NUMERATOR / 7.0) ** (-1.0 / 8.0)


def k2_trial_energy(rho: float, alpha: float = 0.0) -> float:
    """Energy of the width-rho cos^2 trial state in the k=2 operator:
    alpha^2 + pi^2/(3 rho^2) + (trial numerator)/(252 pi^6) * rho^6.

    Minimizing this over rho reproduces upper_bound_A_k2 and
    trial_width_k2; kept as an independent cross-check route.
    """
    if rho <= 0:
        raise ValueError("rho must be positive")
    return (
        alpha * alpha
        + math.pi**2 / (3.0 * rho * rho)
        + _K2_TRIAL_NUMERATOR / (252.0 * math.pi**6) * rho**6
    )


def upper_bound_A_general(k: int) -> float:
    """The general trial-state bound, valid for every even k >= 2:
    (pi^2/4) ((k+2)/(k+1)) ((1/4)(k+1)(2k+3)(2k+4)(2k+5))^(-1/(k+2)).
    """
    _require_even_k(k)
    log_prod = (
        math.log(0.25)
        + math.log(k + 1.0)
        + math.log(2.0 * k + 3.0)
        + math.log(2.0 * k + 4.0)
        + math.log(2.0 * k + 5.0)
    )
    return PI2_OVER_4 * (k + 2.0) / (k + 1.0) * math.exp(-log_prod / (k + 2.0))


def upper_bound_A(k: int) -> float:
    """Upper bound A_k on the bottom eigenvalue at alpha = 0.

    Uses the sharp cos^2 value at k = 2 (the general formula also covers
    k = 2 but is weaker there) and the general formula for k >= 4.
    """
    _require_even_k(k)
    if k == 2:
        return upper_bound_A_k2()
    return upper_bound_A_general(k)


def logderiv_cubic(k: float) -> float:
    """p(k) = 3.73 k^3 + 10.69 k^2 - 5.02 k - 17.98.

    Floor polynomial for the logarithmic derivative of the general A
    formula; p > 0 on k >= 2 is what makes A_k increasing.  p(2) = 44.58.
    """
    return 3.73 * k**3 + 10.69 * k**2 - 5.02 * k - 17.98


def verify_A_increasing(k_max: int) -> Tuple[bool, list]:
    """Check A_(k+2) > A_k along even k up to k_max with the general formula.

    Returns (all_increasing, margins) where margins[i] is the increment
    from the i-th even k to the next.  Together with the k -> infinity
    limit pi^2/4 this pins A_k < pi^2/4 for all even k.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    ks = range(2, k_max + 1, 2)
    values = [upper_bound_A_general(k) for k in ks]
    margins = [b - a for a, b in zip(values, values[1:])]
    return all(m > 0.0 for m in margins), margins


def lower_bound_B(k: int) -> float:
    """Second-eigenvalue floor, uniform in alpha:
    B_k = 3^(2k/(k+2)) (k+2) / (2^((2k+2)/(k+2)) (k+1)^((k+1)/(k+2))).

    Commutator comparison with a harmonic oscillator fitted under the
    half-power model; tends to 9/4 as k grows.
    """
    _require_even_k(k)
    e = k + 2.0
    return math.exp(
        2.0 * k / e * math.log(3.0)
        + math.log(e)
        - (2.0 * k + 2.0) / e * math.log(2.0)
        - (k + 1.0) / e * math.log(k + 1.0)
    )


def optimal_harmonic_T(k: int) -> float:
    """The barrier position optimizing lower_bound_B_at_T: (3 sqrt(2k)/4)^(2/(k+2))."""
    _require_even_k(k)
    return (3.0 * math.sqrt(2.0 * k) / 4.0) ** (2.0 / (k + 2.0))


def lower_bound_B_at_T(k: int, T: float) -> float:
    """The unoptimized second-eigenvalue floor as a function of T > 0:
    h(k) * (3 omega - (2k-4)/k^2 * T^k) with omega = sqrt(2 T^(k-2) / k).

    The half-power model potential dominates the tangent parabola
    omega^2 t^2 - const, whose second eigenvalue is 3 omega - const.
    Maximizing over T recovers lower_bound_B exactly.
    """
    _require_even_k(k)
    if T <= 0:
        raise ValueError("T must be positive")
    omega = math.sqrt(2.0 * math.exp((k - 2) * math.log(T)) / k)
    const = (2.0 * k - 4.0) / (k * k) * math.exp(k * math.log(T))
    return h_closed(k) * (3.0 * omega - const)


def b_tilde_minimum_T(k: int) -> float:
    """Smallest T with T^k above the Dirichlet-box ceiling (pi/T)^2."""
    return math.exp(2.0 * math.log(math.pi) / (k + 2.0))


def lower_bound_B_tilde(k: int, T: float = B_TILDE_T) -> float:
    """Large-k second-eigenvalue floor via the Dirichlet step well:
    B~_k = ((sqrt(5)-1)/2) * ((pi - arctan(sqrt((pi/T)^2 / (T^k - (pi/T)^2)))) / T)^2.

    Certified for even k >= 70 at T = 1.1; computable whenever
    T^k > (pi/T)^2.  The arctan expression under-estimates the exact
    step-well eigenvalue, so this floor sits below
    ((sqrt(5)-1)/2) * dirichlet_well_lambda(T, k).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if T <= 1.0:
        raise ValueError("T must exceed 1")
    # exponent clamp: past 700 the arctan argument underflows to zero
    # anyway, so the clamp is exact in double precision
    barrier = math.exp(min(k * math.log(T), 700.0))
    ceiling = (math.pi / T) ** 2
    if not barrier > ceiling:
        raise ValueError("need T^k > (pi/T)^2 for the step well to bind")
    ratio = ceiling / (barrier - ceiling)
    root = (math.pi - math.atan(math.sqrt(ratio))) / T
    return _GOLDEN_SIGMA * root * root


def lower_bound_B_tilde_optimized(k: int, T_hi: float = 3.0):
    """(best_T, value) maximizing the B~ expression over T.

    Exposed for exploration only; certificates stick to T = 1.1.
    """
    t_lo = max(1.0 + 1e-9, 1.05 * b_tilde_minimum_T(k))
    best_T, value = maximize_golden(
        lambda T: lower_bound_B_tilde(k, T), t_lo, T_hi, xtol=1e-10
    )
    return best_T, value


def c_bound_terms(k: int, alpha0: float = 1.5) -> Tuple[float, float]:
    """The two competing floors behind lower_bound_C, for alpha >= alpha0:

      first  = (alpha0 - 1/(k+1))^2                     (well bottom, t < 1)
      second = (alpha0 (k+1) - 1) /
               ((k+1) ((alpha0 (k+1))^(1/(k+1)) - 1)) * 0.59
                                                (de Gennes comparison, t >= 1)
    """
    _require_even_k(k)
    if alpha0 < 1.5:
        raise ValueError("alpha0 must be at least 3/2")
    first = (alpha0 - 1.0 / (k + 1.0)) ** 2
    scaled = alpha0 * (k + 1.0)
    second = (
        (scaled - 1.0)
        / ((k + 1.0) * (math.exp(math.log(scaled) / (k + 1.0)) - 1.0))
        * THETA0_LOWER
    )
    return first, second


def lower_bound_C(k: int, alpha0: float = 1.5) -> float:
    """Floor on the bottom eigenvalue for alpha >= alpha0 (alpha0 >= 3/2).

    Certified uses are alpha0 = 3/2 (small k) and alpha0 = 2.8 (large k).
    """
    return min(c_bound_terms(k, alpha0))


def exclusion_radii(k: int) -> Tuple[float, Optional[float]]:
    """(alpha_star, alpha_double_star) for even k.

      alpha_star         = sqrt((k+2)/(k+6) B - A_k), with B = B_k for
                           k <= 68 and B = B~_k for k >= 70; no critical
                           point exists in (0, alpha_star).
      alpha_double_star  = 3/2 - sqrt(C_k - A_k); no global minimum
                           exists beyond it.

    A negative alpha_star radicand would break the certification chain
    and raises CertificationError.  For k >= 70 the chain does not use
    alpha_double_star; it is still returned when C_k > A_k and is None
    otherwise (for very large k the C floor drops below A_k).
    """
    _require_even_k(k)
    a_k = upper_bound_A(k)
    b_k = lower_bound_B(k) if k <= 68 else lower_bound_B_tilde(k)
    radicand = (k + 2.0) / (k + 6.0) * b_k - a_k
    if radicand <= 0.0:
        raise CertificationError(
            f"gap floor failed at k={k}: (k+2)/(k+6) B = "
            f"{(k + 2.0) / (k + 6.0) * b_k} does not exceed A_k = {a_k}"
        )
    alpha_star = math.sqrt(radicand)
    c_k = lower_bound_C(k)
    c_radicand = c_k - a_k
    if c_radicand <= 0.0:
        if k <= 68:
            raise CertificationError(
                f"large-alpha floor failed at k={k}: C_k = {c_k} "
                f"does not exceed A_k = {a_k}"
            )
        return alpha_star, None
    return alpha_star, 1.5 - math.sqrt(c_radicand)


@dataclass(frozen=True)
class BoundsTable:
    """All closed-form constants for one even k."""

    k: int
    a_k: float
    b_k: float
    b_tilde_k: Optional[float]
    c_k: float
    h_k: float
    alpha_star: float
    alpha_double_star: Optional[float]
    theta0_lower: float = THETA0_LOWER

    def __post_init__(self):
        if not self.a_k < PI2_OVER_4:
            raise CertificationError(f"A_{self.k} = {self.a_k} is not below pi^2/4")
        if self.alpha_double_star is not None and not self.alpha_double_star < 1.5:
            raise CertificationError(
                f"alpha_double_star = {self.alpha_double_star} is not below 3/2"
            )


def bounds_table(k: int) -> BoundsTable:
    """Assemble the BoundsTable for an even k (B~ reported for k >= 70)."""
    _require_even_k(k)
    alpha_star, alpha_double_star = exclusion_radii(k)
    return BoundsTable(
        k=k,
        a_k=upper_bound_A(k),
        b_k=lower_bound_B(k),
        b_tilde_k=lower_bound_B_tilde(k) if k >= 70 else None,
        c_k=lower_bound_C(k),
        h_k=h_closed(k),
        alpha_star=alpha_star,
        alpha_double_star=alpha_double_star,
    )
