# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython kernel backend.

Same semantics and accumulation order as ``pulrec._kernels._numpy`` (the
reference implementation); compiled with -ffp-contract=off so results are
bit-identical between the two backends.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def row_dots(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
             double[::1] data, double[::1] dense):
    cdef Py_ssize_t n_rows = indptr.shape[0] - 1
    out_arr = np.zeros(n_rows)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double acc
    for i in range(n_rows):
        acc = 0.0
        for j in range(indptr[i], indptr[i + 1]):
            acc += data[j] * dense[indices[j]]
        out[i] = acc
    return out_arr


def transpose_dot(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                  double[::1] data, double[::1] row_weights, Py_ssize_t n_cols):
    cdef Py_ssize_t n_rows = indptr.shape[0] - 1
    out_arr = np.zeros(n_cols)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double w
    for i in range(n_rows):
        w = row_weights[i]
        for j in range(indptr[i], indptr[i + 1]):
            out[indices[j]] += data[j] * w
    return out_arr


def masked_row_sum(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                   double[::1] data, cnp.uint8_t[::1] row_mask, Py_ssize_t n_cols):
    cdef Py_ssize_t n_rows = indptr.shape[0] - 1
    out_arr = np.zeros(n_cols)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    for i in range(n_rows):
        if row_mask[i]:
            for j in range(indptr[i], indptr[i + 1]):
                out[indices[j]] += data[j]
    return out_arr
