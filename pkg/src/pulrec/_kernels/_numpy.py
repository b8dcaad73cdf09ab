"""Pure-numpy kernel backend.

Reference implementations for the compiled backend in ``_speedups.pyx``:
same shapes, dtypes and accumulation order, so both produce bit-identical
results. All CSR arrays are int64 (indptr, indices) and float64 (data).
"""

import numpy as np


def row_dots(indptr, indices, data, dense):
    """Dot product of every CSR row with a dense vector; returns (n_rows,)."""
    n_rows = indptr.shape[0] - 1
    if data.shape[0] == 0:
        return np.zeros(n_rows)
    contrib = data * dense[indices]
    row_ids = np.repeat(np.arange(n_rows, dtype=np.int64), np.diff(indptr))
    return np.bincount(row_ids, weights=contrib, minlength=n_rows)


def transpose_dot(indptr, indices, data, row_weights, n_cols):
    """X.T @ row_weights for CSR X; returns (n_cols,)."""
    if data.shape[0] == 0:
        return np.zeros(n_cols)
    per_entry = np.repeat(row_weights, np.diff(indptr))
    return np.bincount(indices, weights=data * per_entry, minlength=n_cols)


def masked_row_sum(indptr, indices, data, row_mask, n_cols):
    """Column-wise sum of the CSR rows selected by the boolean row_mask."""
    if data.shape[0] == 0:
        return np.zeros(n_cols)
    selected = np.repeat(row_mask.astype(bool), np.diff(indptr))
    if not selected.any():
        return np.zeros(n_cols)
    return np.bincount(indices[selected], weights=data[selected], minlength=n_cols)
