"""scikit-learn compatible wrappers.

TriangleInvariants maps triangles to (b, i, 2a) rows; RealizabilityClassifier
predicts whether a (b, i) pair is realized by some lattice triangle;
ConeIndexer maps pairs to the index of the open cone containing them.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import cones, realizability
from .core import LatticeTriangle, bi_pair, brute_force_bi, hnf_normalize, pick_area_twice
from .validation import check_pairs, check_triangles


class TriangleInvariants(TransformerMixin, BaseEstimator):
    """Transform triangles into rows (b, i, 2a).

    Parameters
    ----------
    method : {"formula", "scan"}
        "formula" reduces each triangle to Hermite normal form and uses the
        gcd counts; "scan" counts lattice points directly.
    hnf : bool
        Append the canonical (A, B, C) columns.
    """

    def __init__(self, method="formula", hnf=False):
        self.method = method
        self.hnf = hnf

    def fit(self, X, y=None):
        if self.method not in ("formula", "scan"):
            raise ValueError(f"unknown method {self.method!r}")
        check_triangles(X)
        self.n_features_in_ = 6
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        tris = check_triangles(X)
        rows = []
        for t in tris:
            tri = LatticeTriangle.from_coords(*map(tuple, t.tolist()))
            h = hnf_normalize(tri)
            p = bi_pair(h) if self.method == "formula" else brute_force_bi(tri)
            row = [p.b, p.i, pick_area_twice(p)]
            if self.hnf:
                row.extend(h.triple)
            rows.append(row)
        return np.asarray(rows, dtype=np.int64).reshape(len(rows), 6 if self.hnf else 3)


class RealizabilityClassifier(ClassifierMixin, BaseEstimator):
    """Predict membership of (b, i) pairs in the lattice-triangle pair set.

    ``fit`` enumerates every realizable pair with 2i + b - 2 <= n_max; pairs
    outside that window fall back to the exact divisor search, so
    predictions never depend on n_max, only their cost does.
    """

    def __init__(self, n_max=200, shards=1):
        self.n_max = n_max
        self.shards = shards

    def fit(self, X=None, y=None):
        if X is not None:
            check_pairs(X)
        self.pairs_ = realizability.enumerate_pairs(self.n_max, shards=self.shards)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "pairs_")
        out = np.empty(len(X), dtype=bool)
        for k, (b, i) in enumerate(check_pairs(X).tolist()):
            if 2 * i + b - 2 <= self.pairs_.n_max:
                out[k] = (b, i) in self.pairs_
            else:
                out[k] = realizability.is_realizable((b, i))
        return out

    def witnesses(self, X):
        """(A, B, C) for each row, or (0, 0, 0) when the pair is not realizable."""
        rows = []
        for b, i in check_pairs(X).tolist():
            w = realizability.membership_witness((b, i))
            rows.append(w.triple if w is not None else (0, 0, 0))
        return np.asarray(rows, dtype=np.int64).reshape(-1, 3)


class ConeIndexer(TransformerMixin, BaseEstimator):
    """Transform (b, i) pairs into the open cone index c, 0 for none.

    Columns after the first two are ignored.
    """

    def fit(self, X, y=None):
        check_pairs(X, extra_columns=True)
        self.n_features_in_ = 2
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        return np.asarray(
            [[cones.cone_classify((b, i)) or 0] for b, i in check_pairs(X, extra_columns=True).tolist()],
            dtype=np.int64,
        ).reshape(-1, 1)
