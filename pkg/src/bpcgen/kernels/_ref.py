"""Reference (pure numpy) kernels.

These are the fallback implementations selected when the compiled
extension is unavailable. The compiled backend in ``_core.pyx``
replicates the exact same arithmetic, operation for operation, so both
backends agree bitwise on indices/assignments and to the last ulp on
accumulated sums.
"""

import numpy as np

# Rows of the query cloud processed per block; bounds the N*M scratch matrix.
_BLOCK = 256


def min_sqdist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Per-row minimum squared Euclidean distance from rows of `a` to rows of `b`."""
    n = a.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i0 in range(0, n, _BLOCK):
        i1 = min(i0 + _BLOCK, n)
        diff = a[i0:i1, None, :] - b[None, :, :]
        d2 = (diff * diff).sum(axis=-1)
        out[i0:i1] = d2.min(axis=1)
    return out


def farthest_point_indices(points: np.ndarray, k: int, seed_index: int) -> np.ndarray:
    """Greedy farthest-point selection.

    The first pick is ``seed_index``; every later pick is the not yet
    selected point with the largest minimum distance to the selected
    set, ties broken by lowest index. Selected points are masked with a
    sentinel so exact duplicates cannot be picked twice.
    """
    out = np.empty(k, dtype=np.int64)
    out[0] = seed_index
    diff = points - points[seed_index]
    d2 = (diff * diff).sum(axis=-1)
    d2[seed_index] = -1.0
    for i in range(1, k):
        nxt = int(np.argmax(d2))
        out[i] = nxt
        diff = points - points[nxt]
        nd = (diff * diff).sum(axis=-1)
        np.minimum(d2, nd, out=d2)
        d2[nxt] = -1.0
    return out


def auction_assignment(
    cost: np.ndarray,
    eps_final: float,
    eps_start: float | None = None,
    scaling: float = 8.0,
) -> np.ndarray:
    """Complete assignment minimizing total cost via epsilon-scaling auction.

    Jacobi variant: per round every unassigned row bids on the price
    vector frozen at round start, then each contested column goes to the
    highest bid (ties to the lowest row index). Prices persist across
    scaling phases; the returned assignment satisfies eps-complementary
    slackness at ``eps_final``, so its cost is within ``n * eps_final``
    of the optimum.
    """
    n = cost.shape[0]
    result = np.full(n, -1, dtype=np.int64)
    if n == 1:
        result[0] = 0
        return result

    prices = np.zeros(n, dtype=np.float64)
    if eps_start is None:
        eps_start = float(cost.max()) / 2.0
    eps = max(eps_start, eps_final)

    while True:
        row_to_col = np.full(n, -1, dtype=np.int64)
        col_to_row = np.full(n, -1, dtype=np.int64)
        while True:
            unassigned = np.nonzero(row_to_col < 0)[0]
            if unassigned.size == 0:
                break
            vals = -cost[unassigned] - prices
            best_j = np.argmax(vals, axis=1)
            ar = np.arange(unassigned.size)
            best_v = vals[ar, best_j]
            vals[ar, best_j] = -np.inf
            second_v = vals.max(axis=1)
            bids = (best_v - second_v) + eps + prices[best_j]
            # Highest bid per column wins; equal bids go to the lowest row.
            order = np.lexsort((unassigned, -bids, best_j))
            obj_sorted = best_j[order]
            firsts = np.nonzero(np.r_[True, obj_sorted[1:] != obj_sorted[:-1]])[0]
            for pos in firsts:
                j = obj_sorted[pos]
                winner = unassigned[order[pos]]
                prices[j] = bids[order[pos]]
                old = col_to_row[j]
                if old >= 0:
                    row_to_col[old] = -1
                col_to_row[j] = winner
                row_to_col[winner] = j
        if eps <= eps_final:
            return row_to_col
        eps = max(eps / scaling, eps_final)
