"""Forward solvers: maximize a scalarized linear objective over a finite
action set, breaking ties by taking the lexicographically smallest
maximizer.  Also instance generators for explicit sets, 0/1 knapsacks,
and polytope vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import Instance, as_weights, make_instance

__all__ = [
    "ArgmaxResult",
    "KnapsackSpec",
    "lex_min",
    "solve",
    "knapsack_instance",
    "polytope_vertex_instance",
    "DEFAULT_TIE_TOL",
]

DEFAULT_TIE_TOL = 1e-9

# Explicit enumeration bound for knapsack subsets (2^20 candidate vectors).
MAX_KNAPSACK_ITEMS = 20


def lex_min(candidates) -> np.ndarray:
    """Return the minimum of the candidate vectors under lexicographic order.

    Coordinates are compared left to right; the order is total on any
    finite set, so the minimum is unique among distinct vectors.
    """
    arr = np.asarray(candidates, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ValueError("empty candidate set")
    # np.lexsort keys are compared last-first, so feed columns reversed.
    order = np.lexsort(arr.T[::-1])
    return arr[order[0]].copy()


@dataclass(frozen=True)
class ArgmaxResult:
    """Outcome of maximizing weights . action over an instance's actions."""

    optimal_value: float
    optimal_set: np.ndarray  # (n_tied, d), all actions within tie tolerance
    chosen: np.ndarray  # lexicographic minimum of optimal_set


def solve(phi, inst: Instance, tie_tol: float = DEFAULT_TIE_TOL) -> ArgmaxResult:
    """Maximize ``phi . a`` over ``inst.actions``, lexicographic tie-break.

    With ``tie_tol > 0`` the optimal set contains every action within
    ``tie_tol * max(1, |optimal_value|)`` of the maximum; ``tie_tol=0``
    gives the exact argmax (meaningful when scores are exact floats,
    e.g. integer actions with dyadic-rational weights).
    """
    w = as_weights(phi, inst.dim)
    if tie_tol < 0:
        raise ValueError("tie tolerance must be nonnegative")
    scores = inst.actions @ w
    best = float(scores.max())
    scale = max(1.0, abs(best))
    tied = inst.actions[scores >= best - tie_tol * scale]
    return ArgmaxResult(optimal_value=best, optimal_set=tied, chosen=lex_min(tied))


@dataclass(frozen=True)
class KnapsackSpec:
    """0/1 knapsack feasibility: weights, capacity, per-item feature rows."""

    weights: np.ndarray  # (m,) nonnegative
    capacity: float
    item_features: np.ndarray  # (m, d)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        feats = np.asarray(self.item_features, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("knapsack needs at least one item")
        if np.any(w < 0) or self.capacity < 0:
            raise ValueError("knapsack weights and capacity must be nonnegative")
        if feats.ndim != 2 or feats.shape[0] != w.size:
            raise ValueError("item_features must be an (m, d) matrix")
        w.setflags(write=False)
        feats.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "capacity", float(self.capacity))
        object.__setattr__(self, "item_features", feats)


def knapsack_instance(spec: KnapsackSpec, id: str) -> Instance:
    """Enumerate all feasible 0/1 packings and materialize their feature sums."""
    m = spec.weights.size
    if m > MAX_KNAPSACK_ITEMS:
        raise ValueError("enumeration bound exceeded")
    subsets = (np.arange(2**m)[:, None] >> np.arange(m)) & 1  # (2^m, m)
    feasible = subsets @ spec.weights <= spec.capacity
    actions = subsets[feasible].astype(float) @ spec.item_features
    return make_instance(id, actions)


def polytope_vertex_instance(vertices, id: str) -> Instance:
    """Instance over a polytope given by its vertex list.

    A linear objective attains its maximum at a vertex, so enumerating
    vertices realizes the argmax over the whole polytope.
    """
    return make_instance(id, vertices)
