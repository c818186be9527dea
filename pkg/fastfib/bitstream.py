"""
LSB-first bit reading and writing over byte sequences.

Bit j of the stream (0-based) lives in byte j // 8 with weight 2^(j % 8), so
the first bit of a segment is its least-significant bit.
"""

# fastfib developers
# Copyright (C) 2026

import numpy as np

from .exceptions import TruncatedStreamError


class BitWriter:
    """Append-only LSB-first bit writer.

    Bits are collected in an integer accumulator and flushed to the byte
    buffer a word at a time. Unwritten bits of the final byte are zero.
    """
    def __init__(self):
        self._buffer = bytearray()
        self._acc = 0
        self._n_acc = 0
        self.bit_length = 0

    def write_bit(self, bit):
        """Append a single bit."""
        return self.write_bits(1 if bit else 0, 1)

    def write_bits(self, word, n_bits):
        """Append the n_bits lowest bits of word, lowest bit first.

        Parameters
        ----------
        word : int
            Non-negative integer holding the bits, first bit at weight 1.

        n_bits : int
            Number of bits to append.

        Returns
        -------
        self : BitWriter
        """
        self._acc |= (word & ((1 << n_bits) - 1)) << self._n_acc
        self._n_acc += n_bits
        self.bit_length += n_bits

        if self._n_acc >= 64:
            n_bytes = self._n_acc >> 3
            self._buffer += (self._acc & ((1 << (n_bytes << 3)) - 1)).to_bytes(
                n_bytes, "little")
            self._acc >>= n_bytes << 3
            self._n_acc &= 7

        return self

    def write_code(self, code):
        """Append a terminated Fibonacci code: a_1 .. a_p then the 1-bit.

        Parameters
        ----------
        code : FibonacciCode
            Terminated code.

        Returns
        -------
        self : BitWriter
        """
        if not code.terminated:
            raise ValueError("only terminated codes can be written.")

        word = 0
        for i, a in enumerate(code.bits):
            if a:
                word |= 1 << i

        p = len(code.bits)
        return self.write_bits(word | (1 << p), p + 1)

    def getvalue(self):
        """Written bytes, final byte zero padded.

        Returns
        -------
        data : bytes
        """
        n_bytes = (self._n_acc + 7) >> 3
        return bytes(self._buffer) + self._acc.to_bytes(n_bytes, "little")

    def __len__(self):
        return self.bit_length


class BitReader:
    """LSB-first bit reader.

    Parameters
    ----------
    data : bytes-like
        Byte sequence.

    bit_length : int or None (default=None)
        Number of valid bits. If None, every bit of data is valid.
    """
    def __init__(self, data, bit_length=None):
        self._data = memoryview(bytes(data))
        n_bits = 8 * len(self._data)

        if bit_length is None:
            bit_length = n_bits
        elif not 0 <= bit_length <= n_bits:
            raise ValueError("bit_length must be in [0, {}]; got {}."
                             .format(n_bits, bit_length))

        self.bit_length = bit_length
        self.cursor = 0

    def read_bit(self):
        """Return the bit at the cursor and advance by one.

        Returns
        -------
        bit : int
        """
        if self.cursor >= self.bit_length:
            raise TruncatedStreamError("end of stream at bit {}."
                                       .format(self.cursor))

        bit = (self._data[self.cursor >> 3] >> (self.cursor & 7)) & 1
        self.cursor += 1

        return bit

    def __iter__(self):
        while self.cursor < self.bit_length:
            yield self.read_bit()

    @property
    def remaining(self):
        return self.bit_length - self.cursor


def segments(data):
    """Byte sequence as 8-bit segment values, in byte order.

    Parameters
    ----------
    data : bytes-like

    Returns
    -------
    segments : tuple of int
    """
    return tuple(bytes(data))


def resegment(data, bit_length, segment_size):
    """Split a byte stream into logical segments of segment_size bits.

    Segment j holds stream bits j * S .. (j + 1) * S - 1, first bit at
    weight 1. The final segment is zero padded.

    Parameters
    ----------
    data : bytes-like

    bit_length : int
        Number of valid bits in data.

    segment_size : int
        Bits per segment S.

    Returns
    -------
    segments : list of int
    """
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8),
                         bitorder="little")[:bit_length]

    n_segments = -(-bit_length // segment_size)
    padded = np.zeros(n_segments * segment_size, dtype=np.int64)
    padded[:bit_length] = bits

    weights = np.left_shift(1, np.arange(segment_size, dtype=np.int64))
    return padded.reshape(n_segments, segment_size).dot(weights).tolist()
