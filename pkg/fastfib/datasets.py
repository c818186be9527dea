"""
Test collections of positive integers and the raw-number file format.
"""

# fastfib developers
# Copyright (C) 2026

import numbers

import numpy as np

from sklearn.utils import check_random_state

from .exceptions import ArchiveFormatError


DEFAULT_LENGTH = 2 ** 22

PRNG_ALGORITHM = "MT19937"

UINT32_MAX = 2 ** 32 - 1

PRESETS = {
    "SEQ_ALL": ("SEQ", 1, DEFAULT_LENGTH),
    "SEQ_VerySmall": ("SEQ", 1, 255),
    "SEQ_Small": ("SEQ", 256, 65535),
    "SEQ_Large": ("SEQ", 65536, 16777215),
    "SEQ_VeryLarge": ("SEQ", 16777216, UINT32_MAX),
    "RAND_ALL": ("RAND", 1, UINT32_MAX),
    "RAND_VerySmall": ("RAND", 1, 255),
    "RAND_Small": ("RAND", 256, 65535),
    "RAND_Large": ("RAND", 65536, 16777215),
    "RAND_VeryLarge": ("RAND", 16777216, UINT32_MAX),
}


class CollectionSpec:
    """Description of a test collection.

    Parameters
    ----------
    kind : str
        "SEQ" cycles the range in ascending order, "RAND" draws values
        uniformly from the range.

    low : int
        Smallest value, >= 1.

    high : int
        Largest value, inclusive.

    length : int (default=2**22)
        Number of values.

    seed : int, RandomState instance or None (default=None)
        Seed of the pseudo-random generator, only used when kind="RAND".
    """
    def __init__(self, kind, low, high, length=DEFAULT_LENGTH, seed=None):
        self.kind = kind
        self.low = low
        self.high = high
        self.length = length
        self.seed = seed

    def __repr__(self):
        return ("CollectionSpec(kind={!r}, low={}, high={}, length={}, "
                "seed={!r})".format(self.kind, self.low, self.high,
                                    self.length, self.seed))


def _check_spec(spec):
    if spec.kind not in ("SEQ", "RAND"):
        raise ValueError('Invalid value for kind. Allowed string values are '
                         '"SEQ" and "RAND".')

    for name in ("low", "high", "length"):
        if not isinstance(getattr(spec, name), numbers.Integral):
            raise TypeError("{} must be an integer; got {}."
                            .format(name, getattr(spec, name)))

    if spec.low < 1:
        raise ValueError("low must be >= 1; got {}.".format(spec.low))

    if spec.high < spec.low:
        raise ValueError("empty range [{}, {}].".format(spec.low, spec.high))

    if spec.high > 2 ** 64 - 1:
        raise ValueError("high must fit in 64 bits; got {}.".format(spec.high))

    if spec.length < 0:
        raise ValueError("length must be >= 0; got {}.".format(spec.length))


def preset(name, length=DEFAULT_LENGTH, seed=None):
    """Collection specification of a named preset.

    Parameters
    ----------
    name : str
        One of SEQ_ALL, SEQ_VerySmall, SEQ_Small, SEQ_Large, SEQ_VeryLarge,
        RAND_ALL, RAND_VerySmall, RAND_Small, RAND_Large, RAND_VeryLarge.

    length : int (default=2**22)
        Number of values.

    seed : int or None (default=None)
        Seed for RAND presets.

    Returns
    -------
    spec : CollectionSpec
    """
    try:
        kind, low, high = PRESETS[name]
    except KeyError:
        raise ValueError("unknown preset {!r}. Allowed presets are {}."
                         .format(name, ", ".join(PRESETS)))

    return CollectionSpec(kind, low, high, length=length, seed=seed)


def generate(spec):
    """Generate the values of a collection.

    Parameters
    ----------
    spec : CollectionSpec

    Returns
    -------
    values : numpy.ndarray of shape (spec.length,), dtype uint64
    """
    _check_spec(spec)

    if spec.kind == "SEQ":
        offsets = np.arange(spec.length, dtype=np.uint64)
        n_range = spec.high - spec.low + 1
        if n_range < spec.length:
            offsets %= np.uint64(n_range)

        return offsets + np.uint64(spec.low)

    random_state = check_random_state(spec.seed)

    return random_state.randint(spec.low, spec.high + 1, size=spec.length,
                                dtype=np.uint64)


def make_collection(name, length=DEFAULT_LENGTH, seed=None):
    """Generate a named preset collection, see :func:`preset`."""
    return generate(preset(name, length=length, seed=seed))


def write_raw(path, values):
    """Write values as a little-endian uint64 count followed by the
    little-endian uint64 values.

    Parameters
    ----------
    path : str or path-like

    values : array-like of int
    """
    values = np.asarray(values, dtype="<u8").ravel()

    with open(path, "wb") as f:
        f.write(np.array([values.size], dtype="<u8").tobytes())
        f.write(values.tobytes())


def read_raw(path):
    """Read a raw-number file written by :func:`write_raw`.

    An empty file holds no values.

    Parameters
    ----------
    path : str or path-like

    Returns
    -------
    values : numpy.ndarray, dtype uint64
    """
    with open(path, "rb") as f:
        data = f.read()

    if not data:
        return np.empty(0, dtype=np.uint64)

    if len(data) < 8:
        raise ArchiveFormatError("raw file {} is missing its count header."
                                 .format(path))

    count = int(np.frombuffer(data, dtype="<u8", count=1)[0])
    if len(data) != 8 * (count + 1):
        raise ArchiveFormatError("raw file {} declares {} values but holds "
                                 "{} bytes of data.".format(
                                     path, count, len(data) - 8))

    return np.frombuffer(data, dtype="<u8", offset=8,
                         count=count).astype(np.uint64)
