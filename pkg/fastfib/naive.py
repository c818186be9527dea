"""
Reference Fibonacci encoder and bit-by-bit decoder.
"""

# fastfib developers
# Copyright (C) 2026

from collections import namedtuple

from .bitstream import BitWriter
from .exceptions import CodeOverflowError
from .exceptions import TruncatedStreamError
from .fibonacci import FIB
from .fibonacci import UINT64_MAX
from .fibonacci import check_number
from .fibonacci import zeckendorf_int


EncodedStream = namedtuple("EncodedStream", ["data", "bit_length", "count"])


def encode_stream(numbers):
    """Concatenate the Fibonacci codes of numbers, LSB-first.

    Parameters
    ----------
    numbers : iterable of int
        Positive 64-bit integers.

    Returns
    -------
    stream : EncodedStream
        Named tuple (data, bit_length, count).
    """
    writer = BitWriter()
    write_bits = writer.write_bits

    count = 0
    for n in numbers:
        word, p = zeckendorf_int(check_number(n))
        write_bits(word | (1 << p), p + 1)
        count += 1

    return EncodedStream(writer.getvalue(), writer.bit_length, count)


def decode_naive(data, bit_length, count):
    """Decode count numbers reading the stream bit by bit.

    Every 1-bit adds the Fibonacci number of its position to the current
    value; a 1-bit following a 1-bit is the terminator and closes the
    number.

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
    result : list of int
    """
    fib = FIB.values
    n_fib = len(fib)

    result = []
    if count == 0:
        return result

    append = result.append
    n = 0
    i = 0
    prev = 0
    pos = 0

    for byte in bytes(data):
        for j in range(8):
            if pos == bit_length:
                break
            pos += 1

            if (byte >> j) & 1:
                if prev:
                    if n > UINT64_MAX:
                        raise CodeOverflowError(
                            "decoded value exceeds 64 bits at bit {}."
                            .format(pos))
                    append(n)
                    if len(result) == count:
                        return result
                    n = 0
                    i = 0
                    prev = 0
                else:
                    i += 1
                    if i >= n_fib:
                        raise CodeOverflowError(
                            "code longer than the 64-bit Fibonacci table at "
                            "bit {}.".format(pos))
                    n += fib[i]
                    prev = 1
            else:
                i += 1
                prev = 0

    raise TruncatedStreamError("stream ended after {} of {} numbers."
                               .format(len(result), count))
