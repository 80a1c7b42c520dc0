"""Potential constructors for the two case studies plus user tables.

Continuum strengths are rescaled onto the unit interval: the linear
potential b^3 x becomes V(j) = B j with B = (b/(p+1))^3, and the hyperbolic
well -l(l+1)/cosh^2 becomes V(j) = -h^2 l(l+1)/cosh^2(h j - 1/2) with
h = 1/(p+1).  CSV tables are read as already-scaled lattice values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .lattice import PotentialTable


@dataclass(frozen=True)
class LinearPotentialParams:
    """Continuum strength b for the potential b^3 x and the vertex count."""

    b: float
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("need p >= 1 interior vertices, got %d" % self.p)

    @property
    def lattice_strength(self) -> float:
        """B with V(j) = B j; equals (b/(p+1))^3 by dimensions."""
        return (self.b / (self.p + 1)) ** 3


@dataclass(frozen=True)
class RosenMorseParams:
    """Well strength l for -l(l+1)/cosh^2 and the vertex count."""

    l: float
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("need p >= 1 interior vertices, got %d" % self.p)

    @property
    def h(self) -> float:
        return 1.0 / (self.p + 1)

    @property
    def l_bar(self) -> float:
        return self.l + 0.5


def linear_lattice_potential(params: LinearPotentialParams) -> PotentialTable:
    """V(j) = B j for j = 1..p with B = (b/(p+1))^3."""
    strength = params.lattice_strength
    return PotentialTable(tuple(strength * j for j in range(1, params.p + 1)))


def rosen_morse_lattice_potential(params: RosenMorseParams) -> PotentialTable:
    """V(j) = -h^2 l(l+1) / cosh^2(h j - 1/2), sampled left-anchored on the
    unit interval so the well is centered between the endpoints."""
    h = params.h
    strength = params.l * (params.l + 1.0)
    return PotentialTable(
        tuple(
            -h * h * strength / math.cosh(h * j - 0.5) ** 2
            for j in range(1, params.p + 1)
        )
    )


def discdet_p3_closed_form(potential: PotentialTable) -> float:
    """Determinant ratio for exactly three interior vertices,
    1 + (1/4)(3 S1 + 2 S2 + S3 + v2), with S_i the elementary symmetric
    functions of the three potential values."""
    if potential.p != 3:
        raise ValueError("closed form requires p = 3, got p = %d" % potential.p)
    v1, v2, v3 = potential.values
    s1 = v1 + v2 + v3
    s2 = v1 * v2 + v1 * v3 + v2 * v3
    s3 = v1 * v2 * v3
    return 1.0 + 0.25 * (3.0 * s1 + 2.0 * s2 + s3 + v2)


def load_potential_csv(path) -> PotentialTable:
    """Read one potential value per line; a single non-numeric first line is
    treated as a header.  Values are used as-is (no h^2 scaling applied)."""
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    values = []
    for lineno, raw in enumerate(lines, start=1):
        token = raw.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            if lineno == 1 and not values:
                continue  # header
            raise ValueError(
                "%s: line %d is not a number: %r" % (path, lineno, raw)
            ) from None
    if not values:
        raise ValueError("%s: no potential values found" % path)
    return PotentialTable(tuple(values))
