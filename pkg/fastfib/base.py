"""
Fibonacci codec.
"""

# fastfib developers
# Copyright (C) 2026

import logging
import numbers
import time

import numpy as np

from sklearn.base import BaseEstimator
from sklearn.utils import check_array

from .bitstream import resegment
from .fast import decode_fast
from .naive import decode_naive
from .naive import encode_stream
from .tables import MAX_SEGMENT_SIZE
from .tables import MIN_SEGMENT_SIZE
from .tables import build_tables


logger = logging.getLogger(__name__)


def _check_parameters(decoder, segment_size, verbose):
    if decoder not in ("fast", "naive"):
        raise ValueError('Invalid value for decoder. Allowed string '
                         'values are "fast" and "naive".')

    if (not isinstance(segment_size, numbers.Integral) or
            not MIN_SEGMENT_SIZE <= segment_size <= MAX_SEGMENT_SIZE):
        raise ValueError("segment_size must be an integer in [{}, {}]; "
                         "got {}.".format(MIN_SEGMENT_SIZE, MAX_SEGMENT_SIZE,
                                          segment_size))

    if not isinstance(verbose, bool):
        raise TypeError("verbose must be a boolean; got {}.".format(verbose))


def _check_values(values):
    values = check_array(values, ensure_2d=False, dtype=None,
                          ensure_min_samples=0)

    if values.ndim != 1:
        raise ValueError("numbers must be a 1-dimensional array.")

    if not values.size:
        return values.astype(np.uint64)

    if not np.issubdtype(values.dtype, np.integer):
        raise TypeError("numbers must be integers; got dtype {}."
                        .format(values.dtype))

    if values.min() < 1:
        raise ValueError("zero not encodable; all values must be >= 1.")

    return values


def _check_stream(data, bit_length, count):
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError("data must be bytes-like; got {}.".format(type(data)))

    if not isinstance(bit_length, numbers.Integral) or bit_length < 0:
        raise ValueError("bit_length must be a non-negative integer; got {}."
                         .format(bit_length))

    if bit_length > 8 * len(data):
        raise ValueError("bit_length {} exceeds data size of {} bits."
                         .format(bit_length, 8 * len(data)))

    if not isinstance(count, numbers.Integral) or count < 0:
        raise ValueError("count must be a non-negative integer; got {}."
                         .format(count))


class FibonacciCodec(BaseEstimator):
    """Fibonacci codec for positive 64-bit integers.

    Parameters
    ----------
    decoder : str, optional (default="fast")
        The decompression algorithm. Supported decoders are "fast", the
        table-driven decoder processing one segment per lookup, and
        "naive", the bit-by-bit reference decoder.

    segment_size : int (default=8)
        Segment size S in bits used by the fast decoder, in [2, 16]. The
        mapping tables hold 2^S records each.

    verbose : bool (default=False)
        Enable verbose output.
    """
    def __init__(self, decoder="fast", segment_size=8, verbose=False):
        self.decoder = decoder
        self.segment_size = segment_size
        self.verbose = verbose

    @property
    def tables(self):
        """Mapping tables for the configured segment size.

        Returns
        -------
        tables : MappingTables
        """
        _check_parameters(**self.get_params())

        return build_tables(self.segment_size)

    def encode(self, values):
        """Encode numbers into a Fibonacci-coded stream.

        Parameters
        ----------
        values : array-like, shape = (n_values,)
            Positive integers.

        Returns
        -------
        stream : EncodedStream
            Named tuple (data, bit_length, count).
        """
        _check_parameters(**self.get_params())

        values = _check_values(values)

        time_init = time.perf_counter()
        stream = encode_stream(values.tolist())

        if self.verbose:
            logger.info("encoded %d numbers into %d bytes (%d bits) in "
                        "%.3f s", stream.count, len(stream.data),
                        stream.bit_length, time.perf_counter() - time_init)

        return stream

    def decode(self, data, bit_length, count):
        """Decode count numbers from a Fibonacci-coded stream.

        Parameters
        ----------
        data : bytes-like
            Compressed stream.

        bit_length : int
            Number of valid bits in data.

        count : int
            Number of values to decode.

        Returns
        -------
        numbers : numpy.ndarray of shape (count,), dtype uint64
        """
        _check_parameters(**self.get_params())
        _check_stream(data, bit_length, count)

        time_init = time.perf_counter()

        if self.decoder == "naive":
            result = decode_naive(data, bit_length, count)
        elif self.segment_size == 8:
            # bits past bit_length are not part of the stream
            payload = bytearray(data[:(bit_length + 7) >> 3])
            if bit_length & 7:
                payload[-1] &= (1 << (bit_length & 7)) - 1
            result = decode_fast(payload, count, self.tables)
        else:
            segments = resegment(data, bit_length, self.segment_size)
            result = decode_fast(segments, count, self.tables)

        if self.verbose:
            logger.info("decoded %d numbers with the %s decoder (S=%d) in "
                        "%.3f s", count, self.decoder, self.segment_size,
                        time.perf_counter() - time_init)

        return np.array(result, dtype=np.uint64)

    def decode_stream(self, stream):
        """Decode an :class:`EncodedStream` returned by :meth:`encode`."""
        data, bit_length, count = stream

        return self.decode(data, bit_length, count)
