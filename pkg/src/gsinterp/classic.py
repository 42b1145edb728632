"""Classic iterative interpolation over the basis {1, y, ..., y^ell}.

Runs over points in order; for each derivative order (dx, dy) it picks the
eligible basis element with the smallest weighted degree as pivot, cancels
the derivative from everyone else, and multiplies the pivot by (x - x_i).

Two modes produce bit-identical output:
  * "naive"  — every Hasse value is recomputed from the full-degree element
               via the direct formula.
  * "cached" — per point, elements are reduced mod (x - x_i)^{s_i} once, all
               Hasse matrices are computed from the reductions, and the
               matrices are then maintained through the inner loop by the
               same linear combinations / row shifts applied to the basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly, derivative_orders
from .problem import InterpolationInstance


@dataclass
class TrackedBasis:
    """Basis elements plus their bookkeeping: deltas[j] is the weighted degree
    of elems[j], positions[j] its leading y-position (pairwise distinct)."""

    elems: list[BiPoly]
    deltas: list[int]
    positions: list[int]


def hasse_shift_down(H: list[list[int]], s: int) -> list[list[int]]:
    """Hasse matrix of (x - x0)*b from the one of b: rows move down one,
    new top row zero, entries outside the anti-triangle zeroed."""
    out = [[0] * s for _ in range(s)]
    for dx in range(1, s):
        src = H[dx - 1]
        dst = out[dx]
        for dy in range(s - dx):
            dst[dy] = src[dy]
    return out


def hasse_combine(Hj: list[list[int]], Ht: list[list[int]], c: int, p: int) -> list[list[int]]:
    """Entrywise Hj - c*Ht."""
    return [[(a - c * b) % p for a, b in zip(ra, rb)] for ra, rb in zip(Hj, Ht)]


def _pick_pivot(values: list[int], deltas: list[int], positions: list[int]) -> int | None:
    """Index minimizing (delta, -position) among nonzero values; None if all zero."""
    best = None
    best_key = None
    for j, v in enumerate(values):
        if v == 0:
            continue
        key = (deltas[j], -positions[j])
        if best is None or key < best_key:
            best, best_key = j, key
    return best


def interpolate(
    inst: InterpolationInstance,
    mode: str = "cached",
    pivot_log: list | None = None,
) -> tuple[BiPoly, TrackedBasis]:
    """Solve the instance; returns the minimal element and the full basis.

    pivot_log, if given, receives one (point_index, dx, dy, pivot_index)
    tuple per inner round that found a pivot.
    """
    if mode not in ("naive", "cached"):
        raise ValueError(f"unknown mode {mode!r}")
    field, p = inst.field, inst.field.p
    ell, w = inst.ell, inst.w

    elems = [BiPoly.y_power(field, ell, j) for j in range(ell + 1)]
    deltas = [w * j for j in range(ell + 1)]
    positions = list(range(ell + 1))

    for i, ((xi, yi), s) in enumerate(zip(inst.points, inst.mults)):
        if mode == "cached":
            # hasse_matrix folds the mod-(x - x_i)^s reduction into its
            # synthetic-division pass, so this is the once-per-point cost
            matrices = [e.hasse_matrix(xi, yi, s) for e in elems]
        for dx, dy in derivative_orders(s):
            if mode == "cached":
                values = [H[dx][dy] for H in matrices]
            else:
                values = [e.hasse_derivative(xi, yi, dx, dy) for e in elems]
            t = _pick_pivot(values, deltas, positions)
            if t is None:
                continue  # constraint already satisfied by every element
            if pivot_log is not None:
                pivot_log.append((i, dx, dy, t))
            inv_vt = field.inv(values[t])
            pivot_elem = elems[t]
            for j in range(ell + 1):
                if j == t or values[j] == 0:
                    continue
                c = values[j] * inv_vt % p
                elems[j] = elems[j].sub_scaled(c, pivot_elem)
                if mode == "cached":
                    matrices[j] = hasse_combine(matrices[j], matrices[t], c, p)
            elems[t] = pivot_elem.mul_linear(xi)
            if mode == "cached":
                matrices[t] = hasse_shift_down(matrices[t], s)
            deltas[t] += 1

    basis = TrackedBasis(elems, deltas, positions)
    best = min(range(ell + 1), key=lambda j: (deltas[j], -positions[j]))
    return elems[best], basis
