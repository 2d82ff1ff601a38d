"""
==========================
Year: 2026
==========================
A few utilities used across the core modules.
"""

import os
from typing import Sized

import numpy as np

import fracvuln


def get_data_path(rel_path):
    """
    :return: absolute path of rel_path inside the data/ folder of the installed package.
    """
    package_dir = os.path.dirname(fracvuln.__file__)
    return os.path.realpath(os.path.join(package_dir, "data", rel_path))


class Immutable:
    """
    Attributes can be assigned once, typically in __init__. Numpy arrays passed in should be made read-only by the
    owner.
    """
    def __setattr__(self, key, value):
        if hasattr(self, key):
            raise AttributeError(f"{type(self).__name__}.{key} is already set")
        super().__setattr__(key, value)


def read_only(array):
    array = np.asarray(array)
    array.setflags(write=False)
    return array


def full_precision(value):
    """
    Formats a float with 17 significant digits so it parses back to the same double. Non-floats are passed to str()
    and None becomes an empty cell.
    """
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def compare_iterable(s1, s2, path=""):
    """
    :return: one line per difference between two reports, arrays or nested JSON documents. Empty if they are equal.
    """
    diff = []
    if type(s1) != type(s2):
        diff.append(f"{path}: type {type(s1).__name__} != {type(s2).__name__}")

    elif hasattr(s1, "to_json"):
        diff.extend(compare_iterable(s1.to_json(), s2.to_json(), path))

    elif isinstance(s1, np.ndarray):
        if s1.shape != s2.shape or not np.array_equal(s1, s2, equal_nan=s1.dtype.kind == 'f'):
            diff.append(f"{path}: array contents differ")

    elif isinstance(s1, Sized) and not isinstance(s1, str) and len(s1) != len(s2):
        diff.append(f"{path}: length {len(s1)} != {len(s2)}")

    elif isinstance(s1, dict):
        for key in s1.keys():
            diff.extend(compare_iterable(s1[key], s2[key], f"{path}.{key}"))

    elif isinstance(s1, (list, tuple)):
        for i, (item1, item2) in enumerate(zip(s1, s2)):
            diff.extend(compare_iterable(item1, item2, f"{path}[{i}]"))

    elif s1 != s2:
        diff.append(f"{path}: {s1!r} != {s2!r}")
    return diff
