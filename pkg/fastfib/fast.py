"""
Fast Fibonacci decompression, one segment per table lookup.
"""

# fastfib developers
# Copyright (C) 2026

from .exceptions import CodeOverflowError
from .exceptions import TruncatedStreamError
from .fibonacci import FIB
from .fibonacci import UINT64_MAX
from .tables import build_tables


class DecoderState:
    """Loop state of the fast decoder.

    Attributes
    ----------
    shift : int
        Bit size of the pending partial number, 0 if there is none.

    last_number : int
        Accumulated value of the pending partial number.

    emitted : int
        Numbers produced so far.

    prev_end_with_zero : bool
        end_with_zero flag of the previous segment record.
    """
    __slots__ = ("shift", "last_number", "emitted", "prev_end_with_zero")

    def __init__(self):
        self.shift = 0
        self.last_number = 0
        self.emitted = 0
        self.prev_end_with_zero = False

    def __repr__(self):
        return ("DecoderState(shift={}, last_number={}, emitted={}, "
                "prev_end_with_zero={})".format(
                    self.shift, self.last_number, self.emitted,
                    self.prev_end_with_zero))


def _decode_segments(state, segments, count, map1, map2):
    fib = FIB.values
    n_fib = len(fib)

    result = []
    append = result.append
    extend = result.extend

    shift = state.shift
    last = state.last_number
    prev_ewz = state.prev_end_with_zero

    for s in segments:
        if shift == 0 or prev_ewz:
            n, numbers, r_shift, prev_ewz, swz, first_shifted = map1[s]
        else:
            n, numbers, r_shift, prev_ewz, swz, first_shifted = map2[s]
            if not swz:
                # first bit terminates the pending number
                append(last)
                shift = 0

        if shift == 0:
            if r_shift == 0:
                extend(numbers)
            else:
                extend(numbers[:-1])
                last = numbers[-1]
            shift = r_shift
        else:
            if shift >= n_fib:
                raise CodeOverflowError("pending code exceeds the 64-bit "
                                        "Fibonacci table.")

            last += fib[shift] * numbers[0] + fib[shift - 1] * first_shifted
            if last > UINT64_MAX:
                raise CodeOverflowError("decoded value exceeds 64 bits.")

            if r_shift == 0:
                append(last)
                extend(numbers[1:])
                shift = 0
            elif n == 1:
                shift += r_shift
            else:
                append(last)
                extend(numbers[1:-1])
                last = numbers[-1]
                shift = r_shift

        if len(result) >= count:
            break

    state.shift = shift
    state.last_number = last if shift else 0
    state.prev_end_with_zero = prev_ewz

    if len(result) > count:
        del result[count:]
    state.emitted += len(result)

    return result


def decode_fast(segments, count, tables=None, state=None):
    """Decode count numbers from a sequence of segments.

    Parameters
    ----------
    segments : iterable of int
        Segment values; a bytes object is a sequence of 8-bit segments.

    count : int
        Number of values to decode.

    tables : MappingTables or None (default=None)
        Mapping tables for the segment size. If None, 8-bit tables are
        used.

    state : DecoderState or None (default=None)
        Decoder state, updated in place. If None, a fresh state is used.

    Returns
    -------
    result : list of int
    """
    if tables is None:
        tables = build_tables(8)

    if state is None:
        state = DecoderState()

    if count == 0:
        return []

    result = _decode_segments(state, segments, count, tables.map1,
                              tables.map2)

    if len(result) < count:
        raise TruncatedStreamError("stream ended after {} of {} numbers."
                                   .format(len(result), count))

    return result
