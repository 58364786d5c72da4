"""scikit-learn style front end.

``fit`` computes the symmetric Gröbner basis of the generators, ``transform``
maps polynomials to their normal forms and ``predict`` answers membership::

    est = SymmetricGroebnerBasis().fit(["x1 + x2", "x1*x2"])
    est.predict(["x7", "1"])   # array([ True, False])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .engine import GBConfig, is_member, symmetric_gb
from .reduction import reduce_full
from .validation import check_field, check_polynomials


class SymmetricGroebnerBasis(TransformerMixin, BaseEstimator):
    """Gröbner basis of the symmetric ideal generated by the fitted polynomials.

    Parameters
    ----------
    field : str or Field, default="q"
        ``"q"`` for the rationals or ``"fp:P"`` for GF(P).
    start_order, max_order, confirm_iterations, pair_pruning
        Passed through to :class:`~symgb.engine.GBConfig`.

    Attributes
    ----------
    basis_ : BasisSet
    report_ : GBReport
    field_ : Field
    n_generators_ : int
    """

    def __init__(self, field="q", start_order=None, max_order=20, confirm_iterations=0,
                 pair_pruning=True):
        self.field = field
        self.start_order = start_order
        self.max_order = max_order
        self.confirm_iterations = confirm_iterations
        self.pair_pruning = pair_pruning

    def fit(self, X, y=None):
        fld = check_field(self.field)
        gens = check_polynomials(X, fld, allow_zero=False)
        cfg = GBConfig(self.start_order, self.max_order, self.confirm_iterations, fld,
                       self.pair_pruning)
        self.report_ = symmetric_gb(gens, cfg)
        self.basis_ = self.report_.basis
        self.field_ = fld
        self.n_generators_ = len(gens)
        return self

    def transform(self, X):
        """Normal forms of ``X`` with respect to the fitted basis."""
        check_is_fitted(self, "basis_")
        polys = check_polynomials(X, self.field_, allow_empty=True)
        basis = list(self.basis_.elements)
        return [reduce_full(p, basis).remainder for p in polys]

    def predict(self, X):
        """Boolean membership of each polynomial in the fitted ideal."""
        check_is_fitted(self, "basis_")
        polys = check_polynomials(X, self.field_, allow_empty=True)
        return np.array([is_member(p, self.basis_)[0] for p in polys], dtype=bool)

    def decision_certificates(self, X):
        check_is_fitted(self, "basis_")
        polys = check_polynomials(X, self.field_, allow_empty=True)
        return [is_member(p, self.basis_)[1] for p in polys]
