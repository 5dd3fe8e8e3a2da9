import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from qpadc import (DensityClassifier, GeneticDensityClassifier, input_matrix,
                   majority_bit)

X_ALL = input_matrix(5)
Y_MAJ = np.array([majority_bit(x, 5) for x in range(32)])


def test_default_classifier_is_exact_on_every_input():
    clf = DensityClassifier().fit()
    assert np.array_equal(clf.predict(X_ALL), Y_MAJ)
    assert clf.score(X_ALL, Y_MAJ) == 1.0


def test_default_classifier_gray_code_is_exact():
    clf = DensityClassifier(code="gray").fit()
    assert np.array_equal(clf.predict(X_ALL), Y_MAJ)


def test_predict_proba_is_complementary():
    proba = DensityClassifier().fit().predict_proba(X_ALL)
    assert proba.shape == (32, 2)
    assert np.array_equal(proba.sum(axis=1), np.ones(32))
    assert np.all((proba >= 0) & (proba <= 1))


def test_classifier_exposes_sklearn_params():
    clf = DensityClassifier(theta=12.0, partition=99, steps=4)
    params = clf.get_params()
    assert params["theta"] == 12.0
    assert params["partition"] == 99
    cloned = clone(clf)
    assert cloned.get_params() == params


def test_unfitted_classifier_refuses_to_predict():
    with pytest.raises(NotFittedError):
        DensityClassifier().predict(X_ALL)


def test_classifier_validates_inputs():
    clf = DensityClassifier().fit()
    with pytest.raises(ValueError):
        clf.predict(X_ALL[:, :4])
    with pytest.raises(ValueError):
        clf.predict(np.full((2, 5), 2))
    with pytest.raises(ValueError):
        DensityClassifier(theta=120.0).fit()
    with pytest.raises(ValueError):
        DensityClassifier(partition=1 << 32).fit()


def test_explicit_partition_changes_labels():
    # All cells in the one class: every input maps to class 1.
    clf = DensityClassifier(partition=(1 << 32) - 1).fit()
    assert np.array_equal(clf.predict(X_ALL), np.ones(32, dtype=int))


def test_all_zero_partition_labels_everything_zero():
    clf = DensityClassifier(partition=0).fit()
    assert np.array_equal(clf.predict(X_ALL), np.zeros(32, dtype=int))
    assert clf.predict_proba(X_ALL[:1])[0, 0] == 1.0


GA_KWARGS = dict(pop_size=6, max_gen=2, max_steps=32, seed=40)


def test_genetic_classifier_fit_exposes_search_state():
    model = GeneticDensityClassifier(**GA_KWARGS).fit()
    assert model.best_fitness_ == model.best_individual_.fitness
    assert 1 <= model.best_fitness_ <= 32
    assert len(model.history_) >= 1
    assert model.classifier_.partition == model.best_individual_.z
    labels = model.predict(X_ALL)
    assert set(np.unique(labels)) <= {0, 1}
    assert model.predict_proba(X_ALL).shape == (32, 2)


def test_genetic_classifier_is_deterministic():
    a = GeneticDensityClassifier(**GA_KWARGS).fit()
    b = GeneticDensityClassifier(**GA_KWARGS).fit()
    assert a.best_individual_ == b.best_individual_
    assert np.array_equal(a.predict(X_ALL), b.predict(X_ALL))


def test_genetic_classifier_clone_and_refuse_unfitted():
    model = GeneticDensityClassifier(**GA_KWARGS)
    assert clone(model).get_params() == model.get_params()
    with pytest.raises(NotFittedError):
        model.predict(X_ALL)
