import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from symgb import PrimeField
from symgb.estimator import SymmetricGroebnerBasis
from symgb.validation import check_field, check_polynomials

from helpers import P, texts


def test_fit_predict_transform():
    est = SymmetricGroebnerBasis().fit(["x1 + x2", "x1*x2"])
    assert texts(est.basis_) == ["x1"]
    assert est.n_generators_ == 2
    np.testing.assert_array_equal(est.predict(["x7", "1", "x2*x9 - x4"]), [True, False, True])
    assert texts(est.transform(["x3 + 2"])) == ["2"]
    assert all(c.remainder.is_zero() for c in est.decision_certificates(["x3"]))


def test_params_round_trip_through_clone():
    est = SymmetricGroebnerBasis(field="fp:7", max_order=6)
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    assert twin.fit(["x1 + x2", "x1*x2"]).field_ == PrimeField(7)


def test_unfitted_use_raises():
    with pytest.raises(NotFittedError):
        SymmetricGroebnerBasis().predict(["x1"])


def test_validation():
    assert check_field("fp:3") == PrimeField(3)
    with pytest.raises(TypeError):
        check_field(3)
    assert check_polynomials("x1", check_field("q")) == [P("x1")]
    with pytest.raises(ValueError):
        check_polynomials([], check_field("q"))
    with pytest.raises(ValueError):
        SymmetricGroebnerBasis().fit(["0"])
    with pytest.raises(TypeError):
        check_polynomials([1.5], check_field("q"))
