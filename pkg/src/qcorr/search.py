"""Deterministic derivative-free optimization over unit spheres.

Two stages: a seeded Gaussian grid projected to the sphere picks the best
starting point (ties broken by first index), then a Nelder-Mead polytope
refines it in the ambient space with the objective read at the normalized
point.  Both stages are deterministic for a fixed seed, so results are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize


@dataclass(frozen=True)
class SearchConfig:
    grid_points: int = 1000
    seed: int = 42
    xatol: float = 1e-9
    fatol: float = 1e-13
    maxiter: int = 2000


DEFAULT_SEARCH = SearchConfig()


def maximize_on_sphere(
    objective: Callable[[np.ndarray], float],
    dim: int,
    config: SearchConfig | None = None,
    batch_objective: Callable[[np.ndarray], np.ndarray] | None = None,
) -> tuple[float, np.ndarray]:
    """Maximize a function of a unit vector in R^dim.

    objective maps a unit vector to a float; batch_objective, if given, maps
    an (n, dim) array of unit vectors to n values and is used for the grid
    stage only.  Returns (best_value, best_unit_vector), with the final value
    always evaluated through the scalar objective.
    """
    cfg = config or DEFAULT_SEARCH
    rng = np.random.default_rng(cfg.seed)
    pts = rng.standard_normal((cfg.grid_points, dim))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)

    if batch_objective is not None:
        vals = np.asarray(batch_objective(pts), dtype=float)
    else:
        vals = np.array([objective(p) for p in pts])
    start = pts[int(np.argmax(vals))]

    def neg(x: np.ndarray) -> float:
        n = np.linalg.norm(x)
        if n < 1e-12:
            return np.inf
        return -objective(x / n)

    res = minimize(
        neg,
        start,
        method="Nelder-Mead",
        options={
            "xatol": cfg.xatol,
            "fatol": cfg.fatol,
            "maxiter": cfg.maxiter,
            "maxfev": cfg.maxiter,
        },
    )
    best = res.x / np.linalg.norm(res.x)
    return float(objective(best)), best


def minimize_on_sphere(
    objective: Callable[[np.ndarray], float],
    dim: int,
    config: SearchConfig | None = None,
    batch_objective: Callable[[np.ndarray], np.ndarray] | None = None,
) -> tuple[float, np.ndarray]:
    """Minimize a function of a unit vector in R^dim; see maximize_on_sphere."""
    neg_batch = None
    if batch_objective is not None:
        def neg_batch(pts):
            return -np.asarray(batch_objective(pts))
    val, x = maximize_on_sphere(lambda v: -objective(v), dim, config, neg_batch)
    return -val, x
