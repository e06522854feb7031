"""Scalar slope-energy kernels shared by every other module.

``g`` is the energy density per unit horizontal run of a graph segment with
slope ``z``: a segment of run dx and rise z*dx contributes dx*g(z) to the
resistance.  ``g_star`` is its convex envelope (g is not convex: it bends
over past z = 1), and ``psi = g_star - id`` is the integrand of the relaxed
energy.  All five functions are closed forms; finite differences appear only
in the tests as oracles.
"""

from numba import njit

__all__ = ["g", "g_prime", "g_second", "g_star", "psi"]


@njit(cache=True, nogil=True)
def g(z: float) -> float:
    """Slope-energy density max(z, 0)**3 / (1 + z*z); zero for z <= 0."""
    if z <= 0.0:
        return 0.0
    return z * z * z / (1.0 + z * z)


@njit(cache=True, nogil=True)
def g_prime(z: float) -> float:
    """Derivative of g: z**2 (z**2 + 3) / (1 + z**2)**2 for z >= 0, else 0.

    Strictly increasing on (0, 1) with g_prime(1) = 1, which is what makes
    slope a usable curve parameter for the optimal arc.
    """
    if z <= 0.0:
        return 0.0
    z2 = z * z
    w = 1.0 + z2
    return z2 * (z2 + 3.0) / (w * w)


@njit(cache=True, nogil=True)
def g_second(z: float) -> float:
    """Second derivative of g: 2z (3 - z**2) / (1 + z**2)**3 for z >= 0.

    Positive on (0, sqrt(3)), in particular on the working range (0, 1).
    """
    if z <= 0.0:
        return 0.0
    z2 = z * z
    w = 1.0 + z2
    return 2.0 * z * (3.0 - z2) / (w * w * w)


@njit(cache=True, nogil=True)
def g_star(z: float) -> float:
    """Convex envelope of g: equals g below z = 1, affine z - 1/2 beyond.

    The two branches agree at z = 1 (both 0.5), so evaluating the affine
    branch at the junction is not observable.
    """
    if z >= 1.0:
        return z - 0.5
    return g(z)


@njit(cache=True, nogil=True)
def psi(z: float) -> float:
    """Relaxed-energy integrand g_star(z) - z.

    Equals -z for z <= 0, is strictly decreasing on [0, 1], and is constant
    -0.5 for z >= 1; the flat tail is why slopes beyond 1 are never forced.
    """
    return g_star(z) - z
