"""Eigenvalue extraction, determinant ratios, zero modes, orthogonality and
sampling for the lattice problem.

The boundary problem is equivalent to a real symmetric tridiagonal matrix
(diagonal 2 + V(j), off-diagonals -1, corner entries adjusted by the
boundary rule), so all p eigenvalues are real and simple.  Roots are located
by Sturm-count bisection on that matrix and polished by Newton steps on the
characteristic function; eigenvectors follow from the seeded forward
recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IllPosedRatioError, NoZeroModeError
from .lattice import (
    MAX_COEFF_VERTICES,
    BoundaryCondition,
    PotentialTable,
    boundary_seed,
    char_poly_coefficients,
    characteristic,
    characteristic_with_derivative,
)

ZERO_MODE_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """All p eigenvalues (increasing) with their interior eigenvectors
    y(1..p), each normalized to the seed convention y(1) = 1."""

    eigenvalues: tuple[float, ...]
    eigenvectors: tuple[tuple[float, ...], ...]

    @property
    def p(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class ReducedDeterminant:
    """Product of the nonzero eigenvalues expressed through the zero mode:
    value = -<y,y> / delta_terminal for the seed-normalized mode."""

    value: float
    zero_mode: tuple[float, ...]
    inner: float
    delta_terminal: float


def _tridiagonal_diagonal(potential: PotentialTable, bc: BoundaryCondition) -> list[float]:
    d = [2.0 + v for v in potential.values]
    if bc.kind == "neumann":
        d[0] -= 1.0
        d[-1] -= 1.0
    elif bc.kind == "robin":
        d[0] -= 1.0 / (1.0 + bc.alpha)
        d[-1] -= 1.0 / (1.0 + bc.beta)
    return d


def _count_below(diag: list[float], x: float) -> int:
    # Negative pivots of the LDL^T factorization of T - xI; off-diagonal
    # entries are all -1 so the squared coupling is 1.
    count = 0
    q = 1.0
    for i, di in enumerate(diag):
        q = di - x - (1.0 / q if i else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0.0:
            count += 1
    return count


def _interior_values(
    potential: PotentialTable, lam: float, bc: BoundaryCondition
) -> tuple[list[float], float]:
    """Forward-recurrence values [y(1), ..., y(p)] plus y(p+1)."""
    seed = boundary_seed(bc)
    ym, y = seed.y_j, seed.y_j1
    values = [y]
    for j in range(1, potential.p + 1):
        ym, y = y, (potential.values[j - 1] + 2.0 - lam) * y - ym
        if j < potential.p:
            values.append(y)
    return values, y


def eigenvalues(
    potential: PotentialTable, bc: BoundaryCondition | None = None
) -> Spectrum:
    """All p real eigenvalues, bisected to near machine tolerance and
    Newton-polished, with forward-recurrence eigenvectors."""
    if bc is None:
        bc = BoundaryCondition.dirichlet()
    p = potential.p
    diag = _tridiagonal_diagonal(potential, bc)
    lo0 = min(diag) - 2.0
    hi0 = max(diag) + 2.0
    pad = 1e-9 * max(1.0, abs(lo0), abs(hi0))
    lo0 -= pad
    hi0 += pad

    lams = []
    for k in range(1, p + 1):
        lo, hi = lo0, hi0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if _count_below(diag, mid) >= k:
                hi = mid
            else:
                lo = mid
            if hi - lo <= 1e-14 * max(1.0, abs(lo), abs(hi)):
                break
        lam = 0.5 * (lo + hi)
        # two guarded Newton polish steps on the characteristic function
        for _ in range(2):
            f, df = characteristic_with_derivative(lam, potential, bc)
            if df == 0.0:
                break
            step = f / df
            if not math.isfinite(step) or abs(step) > 1e-8 * max(1.0, abs(lam)):
                break
            lam -= step
        lams.append(lam)
    lams.sort()

    vectors = []
    for lam in lams:
        vals, _ = _interior_values(potential, lam, bc)
        seed_val = vals[0]
        vectors.append(tuple(v / seed_val for v in vals))
    return Spectrum(tuple(lams), tuple(vectors))


def det_ratio(potential: PotentialTable, bc: BoundaryCondition | None = None) -> float:
    """Gel'fand-Yaglom ratio of determinants with and without the potential:
    characteristic(0, V) / characteristic(0, 0), no eigenvalue needed."""
    if bc is None:
        bc = BoundaryCondition.dirichlet()
    denom = characteristic(0.0, PotentialTable.zeros(potential.p), bc)
    if denom == 0.0:
        raise IllPosedRatioError(
            "free characteristic vanishes at lambda=0 for this boundary condition"
        )
    return characteristic(0.0, potential, bc) / denom


def reduced_determinant_zero_mode(potential: PotentialTable) -> ReducedDeterminant:
    """Product of the nonzero eigenvalues when lambda = 0 is an eigenvalue
    (Dirichlet conditions), computed from the zero mode alone:
    -<y,y> / (y(p+1) - y(p)) with the seed normalization y(1) = 1."""
    bc = BoundaryCondition.dirichlet()
    char0 = characteristic(0.0, potential, bc)
    if potential.p <= MAX_COEFF_VERTICES:
        scale = max(abs(c) for c in char_poly_coefficients(potential, bc).coefficients)
    else:
        vals, terminal = _interior_values(potential, 0.0, bc)
        scale = max(1.0, abs(terminal), max(abs(v) for v in vals))
    if abs(char0) >= ZERO_MODE_TOL * scale:
        raise NoZeroModeError(char0)
    vals, terminal = _interior_values(potential, 0.0, bc)
    inner = sum(v * v for v in vals)
    delta = terminal - vals[-1]
    return ReducedDeterminant(
        value=-inner / delta,
        zero_mode=tuple(vals),
        inner=inner,
        delta_terminal=delta,
    )


def zero_mode_eigenvalue_product(potential: PotentialTable) -> float:
    """Cross-check for the reduced determinant: the product of all
    eigenvalues except the one nearest zero."""
    spectrum = eigenvalues(potential)
    drop = min(range(spectrum.p), key=lambda n: abs(spectrum.eigenvalues[n]))
    prod = 1.0
    for n, lam in enumerate(spectrum.eigenvalues):
        if n != drop:
            prod *= lam
    return prod


def christoffel_darboux_residual(
    potential: PotentialTable, lam: float, mu: float, k: int
) -> float:
    """Residual of the Christoffel-Darboux identity for Dirichlet seeds,

        (lam - mu) sum_{j=1}^k y(j,lam) y(j,mu)
            + y(k+1,lam) y(k,mu) - y(k+1,mu) y(k,lam),

    identically zero; the sign of the bracket follows the lam-decreasing
    convention of the recurrence stencil."""
    p = potential.p
    if not 0 <= k <= p:
        raise IndexError("k=%d outside 0..%d" % (k, p))
    bc = BoundaryCondition.dirichlet()

    def values_upto(spectral_point: float) -> list[float]:
        # y(0), y(1), ..., y(k+1)
        seed = boundary_seed(bc)
        ym, y = seed.y_j, seed.y_j1
        out = [ym, y]
        for j in range(1, k + 1):
            vj = potential.values[j - 1]
            ym, y = y, (vj + 2.0 - spectral_point) * y - ym
            out.append(y)
        return out

    u = values_upto(lam)
    v = values_upto(mu)
    acc = 0.0
    for j in range(1, k + 1):
        acc += u[j] * v[j]
    return (lam - mu) * acc + u[k + 1] * v[k] - v[k + 1] * u[k]


def gram_matrix(potential: PotentialTable) -> np.ndarray:
    """Gram matrix of the Dirichlet eigenvectors, entry (n, m) equal to
    sum_j y(j, lam_n) y(j, lam_m); diagonal N(lam_n), off-diagonals zero."""
    spectrum = eigenvalues(potential)
    basis = np.array(spectrum.eigenvectors)
    return basis @ basis.T


def sample_interpolate(samples, potential: PotentialTable, lam: float) -> float:
    """Reconstruct F(lam) = sum_n f(lam_n) <y(lam), y(lam_n)> / <y(lam_n), y(lam_n)>
    from samples f(lam_n) taken at the Dirichlet spectrum.

    Functions in the span of y(1,.) .. y(p,.) are reproduced exactly; at the
    eigenvalues F interpolates the samples."""
    spectrum = eigenvalues(potential)
    if len(samples) != spectrum.p:
        raise ValueError(
            "expected %d samples at the eigenvalues, got %d"
            % (spectrum.p, len(samples))
        )
    bc = BoundaryCondition.dirichlet()
    probe, _ = _interior_values(potential, lam, bc)
    total = 0.0
    for f_n, vec in zip(samples, spectrum.eigenvectors):
        overlap = sum(a * b for a, b in zip(probe, vec))
        norm = sum(b * b for b in vec)
        total += f_n * overlap / norm
    return total
