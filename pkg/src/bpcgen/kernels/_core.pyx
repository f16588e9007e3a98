# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Semantics mirror kernels._ref operation for operation."""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()


def min_sqdist(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double dx, dy, dz, d2, best
    for i in range(n):
        best = INFINITY
        for j in range(m):
            dx = a[i, 0] - b[j, 0]
            dy = a[i, 1] - b[j, 1]
            dz = a[i, 2] - b[j, 2]
            d2 = (dx * dx + dy * dy) + dz * dz
            if d2 < best:
                best = d2
        out[i] = best
    return out_arr


def farthest_point_indices(double[:, ::1] points, Py_ssize_t k, Py_ssize_t seed_index):
    cdef Py_ssize_t n = points.shape[0]
    out_arr = np.empty(k, dtype=np.int64)
    cdef long long[::1] out = out_arr
    d2_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] d2 = d2_arr
    cdef Py_ssize_t i, j, nxt
    cdef double dx, dy, dz, nd, best
    out[0] = seed_index
    for j in range(n):
        dx = points[j, 0] - points[seed_index, 0]
        dy = points[j, 1] - points[seed_index, 1]
        dz = points[j, 2] - points[seed_index, 2]
        d2[j] = (dx * dx + dy * dy) + dz * dz
    d2[seed_index] = -1.0
    for i in range(1, k):
        nxt = 0
        best = d2[0]
        for j in range(1, n):
            if d2[j] > best:
                best = d2[j]
                nxt = j
        out[i] = nxt
        for j in range(n):
            dx = points[j, 0] - points[nxt, 0]
            dy = points[j, 1] - points[nxt, 1]
            dz = points[j, 2] - points[nxt, 2]
            nd = (dx * dx + dy * dy) + dz * dz
            if nd < d2[j]:
                d2[j] = nd
        d2[nxt] = -1.0
    return out_arr


def auction_assignment(double[:, ::1] cost, double eps_final, eps_start=None, double scaling=8.0):
    cdef Py_ssize_t n = cost.shape[0]
    result_arr = np.full(n, -1, dtype=np.int64)
    cdef long long[::1] row_to_col = result_arr
    if n == 1:
        result_arr[0] = 0
        return result_arr

    prices_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] prices = prices_arr
    col_to_row_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] col_to_row = col_to_row_arr
    bid_val_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] bid_val = bid_val_arr
    bid_obj_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] bid_obj = bid_obj_arr
    top_bid_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] top_bid = top_bid_arr
    top_bidder_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] top_bidder = top_bidder_arr

    cdef double eps, cmax, v, best, second, bid
    cdef Py_ssize_t i, j, bj, num_unassigned, old
    cdef long long w

    cmax = 0.0
    for i in range(n):
        for j in range(n):
            if cost[i, j] > cmax:
                cmax = cost[i, j]
    if eps_start is None:
        eps = cmax / 2.0
    else:
        eps = <double> eps_start
    if eps < eps_final:
        eps = eps_final

    while True:
        for i in range(n):
            row_to_col[i] = -1
            col_to_row[i] = -1
        num_unassigned = n
        while num_unassigned > 0:
            # Bidding pass: prices frozen for the whole round (Jacobi).
            for i in range(n):
                if row_to_col[i] >= 0:
                    bid_obj[i] = -1
                    continue
                best = -INFINITY
                second = -INFINITY
                bj = 0
                for j in range(n):
                    v = -cost[i, j] - prices[j]
                    if v > best:
                        second = best
                        best = v
                        bj = j
                    elif v > second:
                        second = v
                bid_obj[i] = bj
                bid_val[i] = (best - second) + eps + prices[bj]
            # Resolution pass: highest bid per column, ties to lowest row.
            for j in range(n):
                top_bid[j] = -INFINITY
                top_bidder[j] = -1
            for i in range(n):
                if bid_obj[i] < 0:
                    continue
                j = bid_obj[i]
                if bid_val[i] > top_bid[j]:
                    top_bid[j] = bid_val[i]
                    top_bidder[j] = i
            for j in range(n):
                w = top_bidder[j]
                if w < 0:
                    continue
                prices[j] = top_bid[j]
                old = col_to_row[j]
                if old >= 0:
                    row_to_col[old] = -1
                    num_unassigned += 1
                col_to_row[j] = w
                row_to_col[w] = j
                num_unassigned -= 1
        if eps <= eps_final:
            return result_arr
        eps = eps / scaling
        if eps < eps_final:
            eps = eps_final
