"""tf-idf vector space: vocabulary, sparse vectors, cosine, spherical centroids.

Weights are raw term frequency times smoothed idf,
``idf(t) = ln((n_train_docs + 1) / (df(t) + 1)) + 1``, L2-normalized, so
cosine similarity is a plain dot product and centroids are spherical
(normalized means). The vocabulary is built from training documents only;
unseen terms drop out at vectorization time.
"""

import hashlib
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import DegenerateCentroidError, VocabularyError


@dataclass(frozen=True, eq=False)
class SparseVector:
    indices: np.ndarray  # int64, strictly increasing
    values: np.ndarray  # float64, no stored zeros

    @classmethod
    def from_entries(cls, entries):
        """Build from (term id, weight) pairs; zeros dropped, ids sorted."""
        entries = [(int(i), float(v)) for i, v in entries if v != 0.0]
        entries.sort()
        indices = np.array([i for i, _ in entries], dtype=np.int64)
        values = np.array([v for _, v in entries], dtype=np.float64)
        return cls(indices, values)

    @property
    def is_empty(self):
        return self.indices.shape[0] == 0

    def entries(self):
        return list(zip(self.indices.tolist(), self.values.tolist()))

    def norm(self):
        return float(np.sqrt(np.dot(self.values, self.values)))

    def dot(self, other):
        """Sparse-sparse dot over the common support."""
        if self.is_empty or other.is_empty:
            return 0.0
        pos = np.searchsorted(self.indices, other.indices)
        pos_ok = pos < self.indices.shape[0]
        matched = np.zeros(other.indices.shape[0], dtype=bool)
        matched[pos_ok] = self.indices[pos[pos_ok]] == other.indices[pos_ok]
        if not matched.any():
            return 0.0
        return float(np.dot(self.values[pos[matched]], other.values[matched]))


EMPTY_VECTOR = SparseVector(np.empty(0, dtype=np.int64), np.empty(0, dtype=np.float64))


class Vocabulary:
    """Dense term ids (0..size-1, first-appearance order) with document frequencies."""

    def __init__(self, term_to_id, doc_freq, n_train_docs):
        self.term_to_id = dict(term_to_id)
        self.doc_freq = np.asarray(doc_freq, dtype=np.int64)
        self.n_train_docs = int(n_train_docs)
        self._idf = np.log((self.n_train_docs + 1.0) / (self.doc_freq + 1.0)) + 1.0

    @property
    def size(self):
        return len(self.term_to_id)

    def idf(self):
        return self._idf


def build_vocabulary(train_docs):
    """Index every term of the training documents; df counts documents."""
    term_to_id = {}
    doc_freq = []
    n_docs = 0
    for doc in train_docs:
        n_docs += 1
        for term in set(doc):
            if term not in term_to_id:
                term_to_id[term] = len(term_to_id)
                doc_freq.append(0)
            doc_freq[term_to_id[term]] += 1
    if not term_to_id:
        raise VocabularyError("no terms: all training documents are empty")
    return Vocabulary(term_to_id, doc_freq, n_docs)


def vocabulary_hash(vocab):
    """32-byte digest of the vocabulary (terms in id order, df, doc count)."""
    h = hashlib.sha256()
    terms = sorted(vocab.term_to_id, key=vocab.term_to_id.get)
    h.update("\n".join(terms).encode("utf-8"))
    h.update(b"\x00")
    h.update(str(vocab.n_train_docs).encode("ascii"))
    h.update(vocab.doc_freq.tobytes())
    return h.digest()


def vectorize(vocab, doc):
    """tf-idf vector for a token list, L2-normalized; all-unseen docs are empty."""
    counts = Counter(doc)
    idf = vocab.idf()
    entries = []
    for term, tf in counts.items():
        term_id = vocab.term_to_id.get(term)
        if term_id is not None:
            entries.append((term_id, tf * idf[term_id]))
    if not entries:
        return EMPTY_VECTOR
    entries.sort()
    indices = np.array([i for i, _ in entries], dtype=np.int64)
    values = np.array([v for _, v in entries], dtype=np.float64)
    values /= np.sqrt(np.dot(values, values))
    return SparseVector(indices, values)


def cosine(a, b):
    """Cosine of two normalized vectors; empty vectors score 0."""
    dot = a.dot(b)
    if dot < 0.0:
        return 0.0
    return min(dot, 1.0)


def centroid(vectors):
    """Spherical centroid: per-term arithmetic mean, then L2-normalized."""
    if not vectors:
        raise ValueError("centroid of an empty list")
    dim = 0
    for v in vectors:
        if not v.is_empty:
            dim = max(dim, int(v.indices[-1]) + 1)
    acc = np.zeros(dim)
    for v in vectors:
        if not v.is_empty:
            acc[v.indices] += v.values
    norm = np.sqrt(np.dot(acc, acc))
    if norm == 0.0:
        raise DegenerateCentroidError("all vectors are empty")
    acc /= norm
    indices = np.flatnonzero(acc)
    return SparseVector(indices.astype(np.int64), acc[indices])


@dataclass(frozen=True, eq=False)
class CsrMatrix:
    """Row-compressed stack of sparse vectors for the numeric kernels."""

    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray
    n_rows: int
    n_cols: int

    @classmethod
    def from_vectors(cls, vectors, n_cols):
        indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
        for i, v in enumerate(vectors):
            indptr[i + 1] = indptr[i] + v.indices.shape[0]
        if vectors:
            indices = np.concatenate([v.indices for v in vectors])
            data = np.concatenate([v.values for v in vectors])
        else:
            indices = np.empty(0, dtype=np.int64)
            data = np.empty(0, dtype=np.float64)
        return cls(
            indptr,
            np.ascontiguousarray(indices, dtype=np.int64),
            np.ascontiguousarray(data, dtype=np.float64),
            len(vectors),
            int(n_cols),
        )

    def dots(self, dense):
        """Per-row dot products with a dense vector."""
        return K.row_dots(self.indptr, self.indices, self.data,
                          np.ascontiguousarray(dense, dtype=np.float64))

    def transpose_dot(self, row_weights):
        """X.T @ row_weights."""
        return K.transpose_dot(
            self.indptr, self.indices, self.data,
            np.ascontiguousarray(row_weights, dtype=np.float64), self.n_cols,
        )

    def masked_sum(self, row_mask):
        """Column sums over the rows picked by a boolean mask."""
        mask = np.ascontiguousarray(row_mask, dtype=np.uint8)
        return K.masked_row_sum(self.indptr, self.indices, self.data, mask, self.n_cols)

    def sum_rows(self):
        return self.masked_sum(np.ones(self.n_rows, dtype=np.uint8))
