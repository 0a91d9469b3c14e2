"""Input checks shared by the estimator wrapper."""
from __future__ import annotations

import numpy as np


def check_text_array(X, name: str = "X") -> list[str]:
    """Coerce ``X`` to a flat list of strings.

    Accepts a single string, any iterable of strings, or a 1-D / single-column
    array-like (numpy array, pandas Series or one-column DataFrame).
    """
    if isinstance(X, str):
        raise TypeError(f"{name} must be an iterable of strings, not a single string; wrap it in a list")
    if hasattr(X, "to_numpy"):
        X = X.to_numpy()
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise ValueError(f"{name} must be 1-D or a single column, got shape {X.shape}")
        X = X.tolist()
    out = list(X)
    for i, item in enumerate(out):
        if not isinstance(item, str):
            raise TypeError(f"{name}[{i}] is {type(item).__name__}, expected str")
    return out


def check_consistent_length(*arrays) -> None:
    lengths = {len(a) for a in arrays if a is not None}
    if len(lengths) > 1:
        raise ValueError(f"inconsistent numbers of samples: {sorted(lengths)}")
