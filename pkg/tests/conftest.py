"""Shared reference helpers for the test suite.

The Mobius-transform reference here is deliberately independent of the
package: it works in complex Euclidean coordinates, which is accurate for
moderate radii and serves as the oracle for the polar triangle machinery.
"""

import cmath
import math

import numpy as np
import pytest

from hypervoronoi.geometry import Point


def to_complex(p: Point) -> complex:
    x, y = p.euclidean
    return complex(x, y)


def from_complex(z: complex) -> Point:
    return Point.from_euclidean(z.real, z.imag)


def mobius_translate(pivot: complex, z: complex) -> complex:
    """Disk automorphism sending pivot to 0 along the geodesic through o."""
    return (z - pivot) / (1.0 - pivot.conjugate() * z)


def mobius_apply(pivot: complex, theta: float, z: complex) -> complex:
    return cmath.exp(1j * theta) * mobius_translate(pivot, z)


def dist_reference(u: complex, v: complex) -> float:
    """The arcsinh closed form, evaluated directly in Euclidean coordinates."""
    num = abs(u - v)
    den = math.sqrt((1.0 - abs(u) ** 2) * (1.0 - abs(v) ** 2))
    return 2.0 * math.asinh(num / den)


def random_point(rng: np.random.Generator, rho_max: float = 10.0) -> Point:
    rho = rng.uniform(0.0, rho_max)
    return Point(rng.uniform(0.0, 2.0 * math.pi), rho)


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)
