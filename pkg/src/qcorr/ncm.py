"""Non-commutativity measure of quantum correlations.

Expanding a two-qubit state over an orthonormal basis of qubit B gives four
operator blocks A_ij on qubit A; the measure sums the Hilbert-Schmidt norms
of their pairwise commutators.  The value depends on the expansion basis,
so the basis-minimized quantity is the meaningful one.  For Bell-diagonal
states both the fixed-basis value and the minimum have closed forms.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .linalg import ID2, commutator, hs_norm, kron, partial_trace
from .measurement import s_from_z, unitary_from_s, z_vector
from .search import SearchConfig, minimize_on_sphere
from .states import bd_coeffs, check_bd

_SQRT8 = float(np.sqrt(8.0))
_SQRT2 = float(np.sqrt(2.0))


def alpha_triple(c) -> tuple[float, float, float]:
    """Pairwise products (c2*c3)^2, (c1*c3)^2, (c1*c2)^2."""
    c1, c2, c3 = bd_coeffs(c)
    return float((c2 * c3) ** 2), float((c1 * c3) ** 2), float((c1 * c2) ** 2)


def a_operators(rho, s) -> list[list[np.ndarray]]:
    """Expansion blocks A_ij of rho over the rotated B basis {V|0>, V|1>}.

    A_ij = Tr_B[(I x |j><i|) rho], so rho = sum_ij A_ij x |i><j|.
    """
    rho = np.asarray(rho, dtype=complex)
    v = unitary_from_s(s)
    kets = [v[:, 0], v[:, 1]]
    blocks = [[None, None], [None, None]]
    for i in range(2):
        for j in range(2):
            flip = np.outer(kets[j], kets[i].conj())
            blocks[i][j] = partial_trace(kron(ID2, flip) @ rho, "A")
    return blocks


def d_a_basis(rho, s) -> float:
    """Sum of ||[A_ij, A_kl]||_2 over the six unordered block pairs."""
    blocks = a_operators(rho, s)
    flat = [blocks[0][0], blocks[0][1], blocks[1][0], blocks[1][1]]
    return float(sum(hs_norm(commutator(x, y)) for x, y in combinations(flat, 2)))


def _closed_from_z(c: np.ndarray, z: np.ndarray) -> float:
    a = np.array(alpha_triple(c))
    z2 = z * z
    zeta = 1.0 - z2
    return float(np.sqrt(a @ z2) / _SQRT8 + np.sqrt(np.maximum(a @ zeta, 0.0)) / _SQRT2)


def d_a_bd_closed(c, s) -> float:
    """Closed form of the basis-dependent measure for a Bell-diagonal state."""
    c = check_bd(c)
    return _closed_from_z(c, z_vector(s))


def d_a_optimized(c) -> float:
    """Basis-minimized measure for a Bell-diagonal state.

    The minimum over bases sits at a coordinate axis of the z sphere; the
    three axis values have closed forms and the smallest wins.
    """
    c1, c2, c3 = check_bd(c)
    candidates = (
        abs(c1 * c2) + 2.0 * np.sqrt((c2 * c3) ** 2 + (c1 * c3) ** 2),
        abs(c2 * c3) + 2.0 * np.sqrt((c1 * c2) ** 2 + (c1 * c3) ** 2),
        abs(c1 * c3) + 2.0 * np.sqrt((c1 * c2) ** 2 + (c2 * c3) ** 2),
    )
    return float(min(candidates) / _SQRT8)


def d_a_numeric(c, config: SearchConfig | None = None) -> tuple[float, np.ndarray]:
    """Minimize the closed form over the z sphere directly.

    Searching over z (two effective angles) removes the gauge redundancy of
    the four-component measurement parameter.  Returns (value, s_best) with
    s_best lifted from the optimal z.
    """
    c = check_bd(c)

    def objective(z):
        return _closed_from_z(c, z)

    def batch(pts):
        a = np.array(alpha_triple(c))
        z2 = pts * pts
        zeta = 1.0 - z2
        return np.sqrt(z2 @ a) / _SQRT8 + np.sqrt(np.maximum(zeta @ a, 0.0)) / _SQRT2

    value, z_best = minimize_on_sphere(objective, 3, config, batch_objective=batch)
    return value, s_from_z(z_best)


def f_hat(theta: float, alpha) -> float:
    """Axis profile sqrt(theta) + 2 sqrt(alpha - theta), alpha = sum alpha_i.

    theta ranges over [0, alpha]; the single interior stationary point
    theta = alpha/5 is a maximum (value sqrt(5 alpha)), so minima sit at the
    ends, i.e. at axis points of the z sphere.
    """
    a1, a2, a3 = (float(x) for x in alpha)
    for a in (a1, a2, a3):
        if a < 0:
            raise ValueError(f"alpha components must be nonnegative, got {alpha}")
    total = a1 + a2 + a3
    if theta < -1e-15 or theta > total + 1e-15:
        raise ValueError(f"theta = {theta} outside [0, {total}]")
    theta = min(max(theta, 0.0), total)
    return float(np.sqrt(theta) + 2.0 * np.sqrt(total - theta))
