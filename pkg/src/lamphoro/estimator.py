"""scikit-learn style wrappers.

``HorofunctionEstimator`` fits a sequence of lamp stands to the
horofunction it converges to and transforms lamp stands into that
horofunction's values.  ``HorofunctionFeatures`` turns lamp stands into a
matrix of values under a fixed list of horofunctions, which makes
Busemann or rib coordinates usable in any sklearn pipeline.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .classify import DEFAULT_HORIZON, Classified, Explicit, classify
from .validation import check_horofunction, check_lamp_stands, check_sequence


class HorofunctionEstimator(BaseEstimator, TransformerMixin):
    """Classify a sequence and evaluate its limiting horofunction.

    Parameters
    ----------
    horizon : int, default=64
        Last index inspected when ``fit`` receives a sequence spec.  A finite
        list of lamp stands is inspected up to its own length.
    strict : bool, default=True
        Raise ``ValueError`` from ``fit`` when the sequence has no
        horofunction or the horizon cannot decide.  Otherwise ``fit``
        succeeds and only ``transform`` fails.
    """

    def __init__(self, horizon=DEFAULT_HORIZON, strict=True):
        self.horizon = horizon
        self.strict = strict

    def fit(self, X, y=None):
        spec = check_sequence(X)
        horizon = self.horizon
        if isinstance(spec, Explicit) and not isinstance(X, (dict, str)) and spec.tail == "hold":
            horizon = max(len(spec.elements) - 1, 4)
        self.result_ = classify(spec, horizon)
        if isinstance(self.result_, Classified):
            self.horofunction_ = self.result_.horofunction
            self.case_ = self.result_.case
        else:
            self.horofunction_ = None
            self.case_ = None
            if self.strict:
                raise ValueError(f"sequence does not determine a horofunction: {self.result_}")
        return self

    def transform(self, X):
        if getattr(self, "horofunction_", None) is None:
            raise NotFittedError("HorofunctionEstimator has no fitted horofunction")
        points = check_lamp_stands(X)
        return np.array([self.horofunction_(x) for x in points], dtype=np.int64)


class HorofunctionFeatures(BaseEstimator, TransformerMixin):
    """Evaluate a fixed list of horofunctions; one output column each."""

    def __init__(self, horofunctions=()):
        self.horofunctions = horofunctions

    def fit(self, X=None, y=None):
        self.horofunctions_ = [check_horofunction(hf) for hf in self.horofunctions]
        if not self.horofunctions_:
            raise ValueError("need at least one horofunction")
        self.n_features_out_ = len(self.horofunctions_)
        return self

    def transform(self, X):
        if not hasattr(self, "horofunctions_"):
            raise NotFittedError("call fit first")
        points = check_lamp_stands(X)
        return np.array([[hf(x) for hf in self.horofunctions_] for x in points], dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.array([str(hf) for hf in self.horofunctions_], dtype=object)
