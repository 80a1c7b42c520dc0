"""Lommel polynomials R^{nu,p}(z) in all working representations.

The same object appears four ways: the closed finite sum, the three-term
recursion from the Graf seeds, the normalized Casoratian of Bessel-function
products, and (when the order tracks the argument) the transitional Airy
limit.
The dictionary back to the lattice problem is nu = (2 - lam)/B, z = 2/B for
a linear potential of strength B, where the degree-p polynomial in nu is the
Dirichlet characteristic function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .specfun import NEAR_INTEGER_TOL, bessel_j, continuum_linear_det_ratio


@dataclass(frozen=True)
class LommelParams:
    """Order nu, integer degree >= -2, and nonzero argument z."""

    nu: float
    degree: int
    z: float

    def __post_init__(self):
        if self.z == 0.0:
            raise DomainError("lommel argument z must be nonzero")
        if self.degree < -2:
            raise ValueError("degree must be >= -2, got %d" % self.degree)

    @classmethod
    def from_lattice(cls, lam: float, strength: float, degree: int) -> "LommelParams":
        """Build from lattice data: nu = (2-lam)/B and z = 2/B for a linear
        potential of strength B."""
        if strength == 0.0:
            raise DomainError("lattice dictionary needs a nonzero linear strength")
        return cls((2.0 - lam) / strength, degree, 2.0 / strength)


def lommel_closed(nu: float, p: int, z: float) -> float:
    """Closed-form Lommel polynomial, degree p >= 0.

    sum_s (-1)^s C(p-s, s) prod_{l=s+1}^{p-s} (nu+l)(2/z); the 2/z factor is
    distributed through the product so each factor stays O(1) and the large
    order-equals-argument regime evaluates without overflow.
    """
    if z == 0.0:
        raise DomainError("lommel argument z must be nonzero")
    if p < 0:
        raise ValueError("lommel_closed needs degree p >= 0; see lommel_eval")
    w = 2.0 / z
    total = 0.0
    for s in range(p // 2 + 1):
        prod = 1.0
        for l in range(s + 1, p - s + 1):
            prod *= (nu + l) * w
        term = math.comb(p - s, s) * prod
        total += -term if s % 2 else term
    return total


def lommel_eval(nu: float, p: int, z: float) -> float:
    """Lommel polynomial for any integer degree.

    Degrees -1 and -2 are the Graf seeds (0 and -1); lower degrees reflect
    through R^{nu,-n-1} = -R^{nu-n, n-1}.
    """
    if p >= 0:
        return lommel_closed(nu, p, z)
    if p == -1:
        return 0.0
    if p == -2:
        return -1.0
    return -lommel_eval(nu + p + 1, -p - 2, z)


def lommel_recurrence(nu: float, p_max: int, z: float) -> list[float]:
    """Values R^{nu,0..p_max}(z) from the three-term recursion
    R^{nu,n} = (2(nu+n)/z) R^{nu,n-1} - R^{nu,n-2} started at the Graf
    seeds R^{nu,-2} = -1, R^{nu,-1} = 0."""
    if z == 0.0:
        raise DomainError("lommel argument z must be nonzero")
    if p_max < 0:
        raise ValueError("p_max must be >= 0, got %d" % p_max)
    out = []
    r_mm, r_m = -1.0, 0.0
    for n in range(p_max + 1):
        r = 2.0 * (nu + n) / z * r_m - r_mm
        out.append(r)
        r_mm, r_m = r_m, r
    return out


def lommel_bessel_residual(nu: float, p: int, z: float) -> float:
    """Residual of Lommel's Bessel-product identity,

        J_{-nu} J_{nu+p+1} + (-1)^p J_nu J_{-nu-p-1}
            + (2 sin(pi nu) / (pi z)) R^{nu,p}(z),

    which vanishes identically for non-integer nu."""
    if abs(nu - round(nu)) < NEAR_INTEGER_TOL:
        raise DomainError(
            "bessel-product identity degenerates within %g of integer nu (nu=%r)"
            % (NEAR_INTEGER_TOL, nu)
        )
    cross_a = bessel_j(-nu, z) * bessel_j(nu + p + 1.0, z)
    cross_b = bessel_j(nu, z) * bessel_j(-nu - p - 1.0, z)
    signed = cross_a - cross_b if p % 2 else cross_a + cross_b
    return signed + 2.0 * math.sin(math.pi * nu) / (math.pi * z) * lommel_closed(nu, p, z)


class NormalizedCasoratian(NamedTuple):
    value: float
    route: str  # "bessel" or "closed-form"


def normalized_casoratian(nu: float, p: int, z: float) -> NormalizedCasoratian:
    """W(nu,p)/W(nu,0) from Bessel products; equals R^{nu,p}(z).

    Near integer nu both Bessel products vanish with sin(pi nu), so the value
    is taken from the closed form instead and flagged by route."""
    if abs(nu - round(nu)) < NEAR_INTEGER_TOL:
        return NormalizedCasoratian(lommel_eval(nu, p, z), "closed-form")
    j_nu = bessel_j(nu, z)
    j_mnu = bessel_j(-nu, z)
    w_p = j_mnu * bessel_j(nu + p + 1.0, z)
    cross = j_nu * bessel_j(-nu - p - 1.0, z)
    w_p = w_p - cross if p % 2 else w_p + cross
    w_0 = j_mnu * bessel_j(nu + 1.0, z) + j_nu * bessel_j(-nu - 1.0, z)
    return NormalizedCasoratian(w_p / w_0, "bessel")


def lommel_transitional_asymptotic(p: int, b: float) -> float:
    """Transitional (order equals argument) limit of R^{z,p}(z) for lam = 0.

    With h = 1/(p+1) and z = 2/(b h)^3 this is (1/h) times the continuum
    linear-potential determinant ratio; as b -> 0 it tends to the free
    terminal value p+1."""
    if p < 0:
        raise ValueError("degree must be >= 0, got %d" % p)
    return (p + 1) * continuum_linear_det_ratio(b)
