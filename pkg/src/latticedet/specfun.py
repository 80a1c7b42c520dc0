"""Self-contained special functions at desk scale.

Everything here is built from scratch by series or coefficient approximation
so the package carries no external math dependency: Gamma (Lanczos), Bessel
J and Y (ascending series), Airy Ai/Bi (Maclaurin), Gauss 2F1, Legendre P,
and the two continuum determinant-ratio formulas they feed.  Domains are
restricted to what the numerics downstream actually need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Lanczos approximation, g = 7, 9 terms.
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

BESSEL_MAX_ARG = 40.0
BESSEL_MAX_ORDER = 40.0
AIRY_MAX_ARG = 8.0
NEAR_INTEGER_TOL = 1e-6

TANH_HALF = math.tanh(0.5)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function on the real line, poles excluded.

    Lanczos approximation with reflection for x < 1/2; relative accuracy is
    comfortably below 1e-12 for |x| <= 50.
    """
    if _is_nonpositive_integer(x):
        raise DomainError("gamma pole at nonpositive integer x=%r" % x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + 7.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def bessel_j(nu: float, z: float) -> float:
    """Bessel J_nu(z) by the ascending power series.

    Terms are added until one falls below 1e-17 of the running sum.  The
    series is kept to the desk-scale window z in (0, 40], |nu| <= 40; larger
    arguments are refused rather than returned inaccurately.
    """
    if z <= 0.0:
        raise DomainError("bessel_j needs z > 0, got z=%r" % z)
    if z > BESSEL_MAX_ARG or abs(nu) > BESSEL_MAX_ORDER:
        raise DomainError(
            "bessel_j series domain is z <= %g, |nu| <= %g (got nu=%r, z=%r)"
            % (BESSEL_MAX_ARG, BESSEL_MAX_ORDER, nu, z)
        )
    if nu < 0.0 and nu == math.floor(nu):
        # J_{-n} = (-1)^n J_n for integer order.
        n = int(-nu)
        val = bessel_j(-nu, z)
        return -val if n % 2 else val
    half = 0.5 * z
    q = half * half
    term = half**nu / gamma(nu + 1.0)
    total = term
    m = 0
    while m < 400:
        term *= -q / ((m + 1.0) * (m + nu + 1.0))
        total += term
        m += 1
        # cutoff only once past the growth hump of the terms
        if abs(term) <= 1e-17 * abs(total) and (m + 1.0) * (m + nu + 1.0) > q:
            break
    return total


def bessel_y(nu: float, z: float) -> float:
    """Weber-Schlafli second solution Y_nu = cot(nu pi) J_nu - J_{-nu}/sin(nu pi).

    Integer and near-integer orders are refused; nothing downstream needs the
    logarithmic integer-order limit.
    """
    if abs(nu - round(nu)) < NEAR_INTEGER_TOL:
        raise DomainError(
            "bessel_y is not supported within %g of integer order (nu=%r)"
            % (NEAR_INTEGER_TOL, nu)
        )
    s = math.sin(math.pi * nu)
    return (math.cos(math.pi * nu) * bessel_j(nu, z) - bessel_j(-nu, z)) / s


@dataclass(frozen=True)
class AiryPair:
    """Values of the two Airy solutions at a common argument."""

    ai: float
    bi: float


def _airy_series(x: float) -> tuple[float, float, float, float]:
    # Power-series solutions of w'' = x w:
    #   f = 1 + x^3/6 + ...,  g = x + x^4/12 + ...
    # returned with their derivatives as (f, g, f', g').
    x3 = x * x * x
    f = 1.0
    g = x
    fp = 0.0
    gp = 1.0
    cf = 1.0  # current f term, x^{3k}
    cg = x  # current g term, x^{3k+1}
    for k in range(1, 200):
        cf *= x3 / ((3 * k - 1) * (3 * k))
        cg *= x3 / ((3 * k) * (3 * k + 1))
        f += cf
        g += cg
        if x != 0.0:
            fp += 3 * k * cf / x
            gp += (3 * k + 1) * cg / x
        if abs(cf) <= 1e-17 * abs(f) and abs(cg) <= 1e-17 * max(abs(g), 1e-300):
            break
    return f, g, fp, gp


def _airy_seeds() -> tuple[float, float, float, float]:
    g13 = gamma(1.0 / 3.0)
    g23 = gamma(2.0 / 3.0)
    ai0 = 3.0 ** (-2.0 / 3.0) / g23
    aip0 = -(3.0 ** (-1.0 / 3.0)) / g13
    bi0 = 3.0 ** (-1.0 / 6.0) / g23
    bip0 = 3.0 ** (1.0 / 6.0) / g13
    return ai0, aip0, bi0, bip0


_AI0, _AIP0, _BI0, _BIP0 = _airy_seeds()


def airy(x: float) -> AiryPair:
    """Airy Ai and Bi by Maclaurin series, |x| <= 8."""
    ai, _, bi, _ = airy_with_derivatives(x)
    return AiryPair(ai, bi)


def airy_with_derivatives(x: float) -> tuple[float, float, float, float]:
    """(Ai, Ai', Bi, Bi') at x, each from the seeded Maclaurin series."""
    if abs(x) > AIRY_MAX_ARG:
        raise DomainError("airy series domain is |x| <= %g, got %r" % (AIRY_MAX_ARG, x))
    f, g, fp, gp = _airy_series(x)
    ai = _AI0 * f + _AIP0 * g
    aip = _AI0 * fp + _AIP0 * gp
    bi = _BI0 * f + _BIP0 * g
    bip = _BI0 * fp + _BIP0 * gp
    return ai, aip, bi, bip


def hyp2f1(a: float, b: float, c: float, x: float) -> float:
    """Gauss hypergeometric series sum (a)_n (b)_n / ((c)_n n!) x^n.

    Terminates when a or b is a nonpositive integer; otherwise requires
    |x| < 1 and sums to a relative cutoff of 1e-16.
    """
    n_stop = None
    if _is_nonpositive_integer(a):
        n_stop = int(-a)
    if _is_nonpositive_integer(b):
        n_stop = int(-b) if n_stop is None else min(n_stop, int(-b))
    if n_stop is None:
        if abs(x) >= 1.0:
            raise DomainError("hyp2f1 series requires |x| < 1, got x=%r" % x)
        if _is_nonpositive_integer(c):
            raise DomainError("hyp2f1 pole: c=%r is a nonpositive integer" % c)
    total = 1.0
    term = 1.0
    n = 0
    while True:
        if n_stop is not None and n >= n_stop:
            break
        if c + n == 0.0:
            raise DomainError("hyp2f1 pole reached at c + n = 0 (c=%r, n=%d)" % (c, n))
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        total += term
        n += 1
        if n_stop is None and abs(term) <= 1e-16 * abs(total):
            break
        if n > 100000:
            raise DomainError("hyp2f1 series failed to converge at x=%r" % x)
    return total


def legendre_p(l: float, x: float) -> float:
    """Legendre function of the first kind via 2F1(-l, 1+l; 1; (1-x)/2).

    Restricted to |x| < 1 strictly; integer degrees terminate to the
    classical polynomials.
    """
    if abs(x) >= 1.0:
        raise DomainError("legendre_p requires |x| < 1, got x=%r" % x)
    return hyp2f1(-l, 1.0 + l, 1.0, 0.5 * (1.0 - x))


def continuum_linear_det_ratio(b: float) -> float:
    """Determinant ratio for the continuum linear potential b^3 x over the
    unit interval: (pi/b) (Ai(0) Bi(b) - Bi(0) Ai(b)), with limit 1 at b = 0.
    """
    if b == 0.0:
        return 1.0
    pair = airy(b)
    return math.pi / b * (_AI0 * pair.bi - _BI0 * pair.ai)


def _rosen_morse_integer(n: int) -> float:
    t = TANH_HALF
    pvals = [legendre_p(float(k), t) for k in range(n + 1)]
    ssum = 0.0
    for m in range(1, n + 1):
        ssum += pvals[m - 1] * pvals[n - m] / m
    val = pvals[n] * (pvals[n] - 2.0 * ssum)
    return -val if n % 2 else val


def continuum_rosen_morse_det_ratio(l: float) -> float:
    """Determinant ratio for the hyperbolic-well potential -l(l+1)/cosh^2(x)
    confined to a unit box, evaluated at t = tanh(1/2).

    Non-integer l uses first-kind Legendre functions,
    -(pi / (2 sin pi l)) (P_l(-t)^2 - P_l(t)^2); within 1e-6 of an integer
    the numerics of that form degrade and the polynomial representation is
    used instead (negative integers map through the l -> -1-l symmetry).
    """
    n = round(l)
    if abs(l - n) < NEAR_INTEGER_TOL:
        n = int(n)
        if n < 0:
            n = -1 - n
        return _rosen_morse_integer(n)
    t = TANH_HALF
    pm = legendre_p(l, -t)
    pp = legendre_p(l, t)
    return -math.pi / (2.0 * math.sin(math.pi * l)) * (pm * pm - pp * pp)
