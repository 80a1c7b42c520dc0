"""Discrete interval eigenproblem: transfer-matrix propagation and
characteristic functions.

The three-term recurrence

    y(j+1) + (lam - V(j) - 2) y(j) + y(j-1) = 0,    j = 1 .. p,

lives on the lattice j = 0 .. p+1 with p interior vertices.  Rewriting it as
a two-term matrix recurrence for the state pair (y(j), y(j+1)) turns boundary
value problems into products of 2x2 unimodular transfer matrices.  The
boundary conditions (Dirichlet, Neumann, Robin) reduce everything to a single
scalar characteristic function of lam whose zeros are the eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateBoundaryError

# Polynomial-coefficient propagation degrades in double precision past this
# many vertices; pointwise evaluation carries no cap.
MAX_COEFF_VERTICES = 60


@dataclass(frozen=True)
class LatticeInterval:
    """The discrete interval with p interior vertices, j = 0 .. p+1."""

    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("need at least one interior vertex, got p=%d" % self.p)

    @property
    def h(self) -> float:
        """Step size when the lattice is mapped onto the unit interval."""
        return 1.0 / (self.p + 1)

    @property
    def vertex_count(self) -> int:
        return self.p + 2


@dataclass(frozen=True)
class PotentialTable:
    """Potential values V(j) on the interior vertices j = 1 .. p."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("potential table must cover at least one vertex")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("potential values must be finite")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    @classmethod
    def of(cls, values) -> "PotentialTable":
        return cls(tuple(float(v) for v in values))

    @classmethod
    def zeros(cls, p: int) -> "PotentialTable":
        return cls((0.0,) * p)

    @property
    def p(self) -> int:
        return len(self.values)

    def v(self, j: int) -> float:
        """V(j) for an interior vertex, 1-based."""
        if not 1 <= j <= self.p:
            raise IndexError("vertex %d outside interior range 1..%d" % (j, self.p))
        return self.values[j - 1]


@dataclass(frozen=True)
class BoundaryCondition:
    """Endpoint rule at j = 0 and j = p+1.

    Dirichlet: y(0) = y(p+1) = 0.
    Neumann:   y(0) = y(1) and y(p) = y(p+1).
    Robin:     forward difference y(1) - y(0) = alpha * y(0) on the left and
               y(p+1) - y(p) = -beta * y(p+1) on the right.
    """

    kind: str
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.kind not in ("dirichlet", "neumann", "robin"):
            raise ValueError("unknown boundary kind %r" % self.kind)
        if self.kind == "robin" and (1.0 + self.alpha == 0.0 or 1.0 + self.beta == 0.0):
            raise DegenerateBoundaryError(
                "robin condition with 1+alpha=0 or 1+beta=0 is degenerate"
            )

    @classmethod
    def dirichlet(cls) -> "BoundaryCondition":
        return cls("dirichlet")

    @classmethod
    def neumann(cls) -> "BoundaryCondition":
        return cls("neumann")

    @classmethod
    def robin(cls, alpha: float, beta: float) -> "BoundaryCondition":
        return cls("robin", float(alpha), float(beta))


@dataclass(frozen=True)
class StateVector:
    """The propagated pair (y(j), y(j+1))."""

    y_j: float
    y_j1: float


@dataclass(frozen=True)
class TransferMatrix:
    """One-step propagator [[0, 1], [-1, phi(j)]] with phi(j) = V(j)+2-lam.

    Row-major entries; the determinant is 1 by structure, so the matrix is
    symplectic for the 2x2 antisymmetric metric.
    """

    a11: float
    a12: float
    a21: float
    a22: float

    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21

    def apply(self, state: StateVector) -> StateVector:
        return StateVector(
            self.a11 * state.y_j + self.a12 * state.y_j1,
            self.a21 * state.y_j + self.a22 * state.y_j1,
        )

    def lambda_split(self, lam: float) -> tuple["TransferMatrix", "TransferMatrix"]:
        """Split self = B - lam*D into the lambda-free part B and the
        constant projector D onto the second state component."""
        b_part = TransferMatrix(self.a11, self.a12, self.a21, self.a22 + lam)
        d_part = TransferMatrix(0.0, 0.0, 0.0, 1.0)
        return b_part, d_part


@dataclass(frozen=True)
class CharPoly:
    """Characteristic function as a dense polynomial in lam.

    Coefficients are ascending, c_0 .. c_p.  For Dirichlet conditions the
    degree is exactly p with leading coefficient (-1)**p.
    """

    coefficients: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, lam: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * lam + c
        return acc


def transfer_matrix(j: int, lam: float, potential: PotentialTable) -> TransferMatrix:
    """The one-step matrix C(j) advancing (y(j-1), y(j)) to (y(j), y(j+1))."""
    phi = potential.v(j) + 2.0 - lam
    return TransferMatrix(0.0, 1.0, -1.0, phi)


def boundary_seed(bc: BoundaryCondition) -> StateVector:
    """Initial pair (y(0), y(1)) after eliminating the left endpoint rule."""
    if bc.kind == "dirichlet":
        return StateVector(0.0, 1.0)
    if bc.kind == "neumann":
        return StateVector(1.0, 1.0)
    return StateVector(1.0, 1.0 + bc.alpha)


def propagate(
    potential: PotentialTable, lam: float, start: StateVector, j_end: int
) -> StateVector:
    """Propagate the state pair from vertex 0 to vertex j_end.

    Iterates y(j+1) = (V(j)+2-lam) y(j) - y(j-1); equivalent to applying the
    transfer-matrix product C(j_end)...C(1) to the start pair.  The boundary
    vertex j = p+1 carries no potential, so j_end = p+1 uses V(p+1) = 0.
    """
    p = potential.p
    if not 0 <= j_end <= p + 1:
        raise IndexError("j_end %d outside lattice range 0..%d" % (j_end, p + 1))
    ym, y = start.y_j, start.y_j1
    for j in range(1, j_end + 1):
        vj = potential.values[j - 1] if j <= p else 0.0
        ym, y = y, (vj + 2.0 - lam) * y - ym
    return StateVector(ym, y)


def casoratian(u: StateVector, v: StateVector) -> float:
    """Discrete Wronskian u~ J v of two states taken at the same vertex.

    Constant along the lattice for any two solutions of the same recurrence.
    """
    return u.y_j * v.y_j1 - u.y_j1 * v.y_j


def characteristic(
    lam: float, potential: PotentialTable, bc: BoundaryCondition | None = None
) -> float:
    """Scalar whose zeros in lam are the eigenvalues of the boundary problem.

    Dirichlet: terminal value y(p+1) from the seed (0, 1).
    Neumann:   y(p+1) - y(p) from the seed (1, 1).
    Robin:     (1+beta)*y(p+1) - y(p) from the seed (1, 1+alpha).
    """
    if bc is None:
        bc = BoundaryCondition.dirichlet()
    state = propagate(potential, lam, boundary_seed(bc), potential.p)
    y_p, y_p1 = state.y_j, state.y_j1
    if bc.kind == "dirichlet":
        return y_p1
    if bc.kind == "neumann":
        return y_p1 - y_p
    return (1.0 + bc.beta) * y_p1 - y_p


def characteristic_with_derivative(
    lam: float, potential: PotentialTable, bc: BoundaryCondition | None = None
) -> tuple[float, float]:
    """Characteristic value together with its lam-derivative.

    Propagates the derivative recurrence y'(j+1) = phi(j) y'(j) - y(j) - y'(j-1)
    alongside the values; the seeds are lam-independent.
    """
    if bc is None:
        bc = BoundaryCondition.dirichlet()
    seed = boundary_seed(bc)
    ym, y = seed.y_j, seed.y_j1
    dym, dy = 0.0, 0.0
    for j in range(1, potential.p + 1):
        phi = potential.values[j - 1] + 2.0 - lam
        y_next = phi * y - ym
        dy_next = phi * dy - y - dym
        ym, y, dym, dy = y, y_next, dy, dy_next
    if bc.kind == "dirichlet":
        return y, dy
    if bc.kind == "neumann":
        return y - ym, dy - dym
    return (1.0 + bc.beta) * y - ym, (1.0 + bc.beta) * dy - dym


def _poly_shift_scale(poly: list[float], const: float) -> list[float]:
    # (const - lam) * poly
    out = [0.0] * (len(poly) + 1)
    for k, c in enumerate(poly):
        out[k] += const * c
        out[k + 1] -= c
    return out


def _poly_sub(a: list[float], b: list[float]) -> list[float]:
    n = max(len(a), len(b))
    return [
        (a[k] if k < len(a) else 0.0) - (b[k] if k < len(b) else 0.0)
        for k in range(n)
    ]


def char_poly_coefficients(
    potential: PotentialTable, bc: BoundaryCondition | None = None
) -> CharPoly:
    """Coefficients of the characteristic function as a polynomial in lam.

    Propagates state pairs whose components are dense polynomials.  Refused
    above p = MAX_COEFF_VERTICES where coefficient growth loses accuracy in
    double precision; use pointwise characteristic() there instead.
    """
    if bc is None:
        bc = BoundaryCondition.dirichlet()
    p = potential.p
    if p > MAX_COEFF_VERTICES:
        raise ValueError(
            "coefficient propagation capped at p=%d (got p=%d); "
            "evaluate characteristic() pointwise instead" % (MAX_COEFF_VERTICES, p)
        )
    seed = boundary_seed(bc)
    ym = [seed.y_j]
    y = [seed.y_j1]
    for j in range(1, p + 1):
        ym, y = y, _poly_sub(_poly_shift_scale(y, potential.values[j - 1] + 2.0), ym)
    if bc.kind == "dirichlet":
        coeffs = y
    elif bc.kind == "neumann":
        coeffs = _poly_sub(y, ym)
    else:
        coeffs = _poly_sub([(1.0 + bc.beta) * c for c in y], ym)
    return CharPoly(tuple(coeffs))


def bleich_melan_dirichlet(j: int, a: float, b: float) -> float:
    """Closed-form Dirichlet solution y(j) for the linear stencil
    phi(j) = a + b*j, seeded by y(0) = 0, y(1) = 1.

    Finite sum over s of (-1)^s C(j-1-s, s) prod_{l=s+1}^{j-1-s} (a + b*l);
    identical to transfer-matrix propagation with V(j) = b*j and lam = 2 - a.
    """
    if j < 0:
        raise IndexError("vertex index must be nonnegative, got %d" % j)
    total = 0.0
    for s in range((j - 1) // 2 + 1):
        prod = 1.0
        for l in range(s + 1, j - s):
            prod *= a + b * l
        term = math.comb(j - 1 - s, s) * prod
        total += -term if s % 2 else term
    return total
