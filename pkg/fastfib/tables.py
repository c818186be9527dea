"""
Segment mapping tables MAP1 and MAP2 for fast Fibonacci decompression.
"""

# fastfib developers
# Copyright (C) 2026

import logging
import numbers

from collections import namedtuple
from functools import lru_cache

from .fibonacci import FIB
from .fibonacci import shift_right_value


logger = logging.getLogger(__name__)


MIN_SEGMENT_SIZE = 2
MAX_SEGMENT_SIZE = 16


MapRecord = namedtuple("MapRecord", ["count", "numbers", "shift",
                                     "end_with_zero", "start_with_zero",
                                     "first_shifted"])
MapRecord.__doc__ = """Decoded content of one segment.

count : int
    Numbers decoded from the segment, trailing partial number included.

numbers : tuple of int
    Decoded values. When shift != 0 the last entry is the partial value.

shift : int
    Bit size of the trailing partial number, 0 if the segment ends with a
    terminator.

end_with_zero : bool
    Whether the last bit of the segment is 0.

start_with_zero : bool
    Whether the first bit of the segment is 0.

first_shifted : int
    V(F(numbers[0]) >>_F 1), 0 when numbers[0] = 0.
"""


def build_record(segment_bits):
    """Decode a segment bit by bit into a mapping-table record.

    Parameters
    ----------
    segment_bits : sequence of {0, 1}
        Segment bits in stream order.

    Returns
    -------
    record : MapRecord
    """
    if not len(segment_bits):
        raise ValueError("segment_bits must contain at least one bit.")

    fib = FIB.values
    values = []
    n = 0
    i = 0
    prev = 0

    for bit in segment_bits:
        if bit and prev:
            values.append(n)
            n = 0
            i = 0
            prev = 0
        else:
            i += 1
            if bit:
                n += fib[i]
            prev = bit

    # i counts the undecoded tail bits of the last number.
    shift = i
    if shift:
        values.append(n)

    first_shifted = shift_right_value(values[0], 1) if values[0] else 0

    return MapRecord(count=len(values), numbers=tuple(values), shift=shift,
                     end_with_zero=not segment_bits[-1],
                     start_with_zero=not segment_bits[0],
                     first_shifted=first_shifted)


def _segment_bits(index, segment_size):
    return [(index >> j) & 1 for j in range(segment_size)]


class MappingTables:
    """MAP1 and MAP2 records for a segment size.

    Even MAP2 entries are the MAP1 record objects themselves.

    Parameters
    ----------
    segment_size : int
        Bits per segment S.

    map1 : tuple of MapRecord
        2^S records.

    map2 : tuple of MapRecord
        2^S records.
    """
    def __init__(self, segment_size, map1, map2):
        self.segment_size = segment_size
        self.map1 = map1
        self.map2 = map2

    @property
    def n_records(self):
        """Number of records per table, 2^S."""
        return len(self.map1)

    @property
    def n_distinct_records(self):
        """Records stored across both tables, aliases counted once."""
        return len(self.map1) + len(self.map2) // 2

    def record(self, which, index):
        """Stored record of MAP1 (which=1) or MAP2 (which=2).

        Parameters
        ----------
        which : int
            1 or 2.

        index : int
            Segment value in [0, 2^S).

        Returns
        -------
        record : MapRecord
        """
        if which not in (1, 2):
            raise ValueError("which must be 1 or 2; got {}.".format(which))

        if (not isinstance(index, numbers.Integral) or
                not 0 <= index < self.n_records):
            raise IndexError("index must be an integer in [0, {}); got {}."
                             .format(self.n_records, index))

        table = self.map1 if which == 1 else self.map2

        return table[index]

    def __repr__(self):
        return "MappingTables(segment_size={})".format(self.segment_size)


@lru_cache(maxsize=None, typed=True)
def build_tables(segment_size=8):
    """Build MAP1 and MAP2 for a segment size.

    Tables are immutable and cached per segment size.

    Parameters
    ----------
    segment_size : int (default=8)
        Bits per segment S, in [2, 16].

    Returns
    -------
    tables : MappingTables
    """
    if (not isinstance(segment_size, numbers.Integral) or
            not MIN_SEGMENT_SIZE <= segment_size <= MAX_SEGMENT_SIZE):
        raise ValueError("segment_size must be an integer in [{}, {}]; "
                         "got {}.".format(MIN_SEGMENT_SIZE, MAX_SEGMENT_SIZE,
                                          segment_size))

    n_records = 1 << segment_size

    map1 = []
    map2 = []
    for index in range(n_records):
        bits = _segment_bits(index, segment_size)
        record = build_record(bits)
        map1.append(record)

        if index & 1:
            # The lowest bit terminates the number pending from the
            # previous segment.
            record = build_record(bits[1:])._replace(start_with_zero=False)
        map2.append(record)

    logger.debug("built mapping tables for S=%d (%d records each)",
                 segment_size, n_records)

    return MappingTables(segment_size, tuple(map1), tuple(map2))


def record_lookup(tables, which, index):
    """Return the record of MAP1 or MAP2 at index, see
    :meth:`MappingTables.record`."""
    return tables.record(which, index)


def format_record(record):
    """Record in the {count,(numbers),shift,end_with_zero,start_with_zero}
    notation.

    Parameters
    ----------
    record : MapRecord

    Returns
    -------
    text : str
    """
    return "{{{},({}),{},{},{}}}".format(
        record.count, ",".join(str(n) for n in record.numbers), record.shift,
        record.end_with_zero, record.start_with_zero)
