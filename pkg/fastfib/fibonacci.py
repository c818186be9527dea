"""
Fibonacci numbers, Zeckendorf representation and Fibonacci shifts.
"""

# fastfib developers
# Copyright (C) 2026

import numbers

from bisect import bisect_right

from .exceptions import CodeOverflowError


UINT64_MAX = 2 ** 64 - 1


class FibonacciTable:
    """Fibonacci numbers F_0 = 1, F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...

    The table holds every F_i representable in 64 bits. By convention
    F_i = 0 for i < 0. Indexing past the last entry raises
    :class:`CodeOverflowError`.
    """
    def __init__(self):
        values = [1, 1]
        while values[-1] + values[-2] <= UINT64_MAX:
            values.append(values[-1] + values[-2])

        self._values = tuple(values)

    def __getitem__(self, i):
        if i < 0:
            return 0

        try:
            return self._values[i]
        except IndexError:
            raise CodeOverflowError("Fibonacci index {} exceeds the 64-bit "
                                    "table (max {}).".format(i, len(self) - 1))

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    @property
    def values(self):
        """Table values as a tuple, values[i] = F_i.

        Returns
        -------
        values : tuple
        """
        return self._values

    def largest_index(self, n):
        """Index i >= 1 of the largest F_i <= n.

        Parameters
        ----------
        n : int
            Positive integer.

        Returns
        -------
        i : int
        """
        # F_0 = F_1, skip F_0 so that n = 1 maps to index 1.
        return bisect_right(self._values, n, lo=1) - 1


FIB = FibonacciTable()


class FibonacciCode:
    """Fibonacci codeword a_1 a_2 ... a_p (1) .

    Parameters
    ----------
    bits : iterable of {0, 1}
        Value bits a_1 .. a_p in stream order.

    terminated : bool (default=True)
        Whether the trailing 1-bit terminator is present.
    """
    __slots__ = ("_bits", "_terminated")

    def __init__(self, bits, terminated=True):
        bits = tuple(int(bool(b)) for b in bits)

        for i in range(1, len(bits)):
            if bits[i] and bits[i - 1]:
                raise ValueError("bits contain adjacent 1-bits at position "
                                 "{}.".format(i))

        if terminated and bits and not bits[-1]:
            raise ValueError("a terminated code must end with a 1 value bit.")

        self._bits = bits
        self._terminated = bool(terminated)

    @classmethod
    def from_string(cls, code):
        """Parse a terminated code written as a string, e.g. "1011".

        Parameters
        ----------
        code : str

        Returns
        -------
        code : FibonacciCode
        """
        if len(code) < 2 or code[-2:] != "11" or set(code) - {"0", "1"}:
            raise ValueError("invalid Fibonacci code string {!r}."
                             .format(code))

        return cls([int(c) for c in code[:-1]], terminated=True)

    @property
    def bits(self):
        return self._bits

    @property
    def terminated(self):
        return self._terminated

    def __len__(self):
        """Emitted bit length, terminator included."""
        return len(self._bits) + self._terminated

    def __eq__(self, other):
        if not isinstance(other, FibonacciCode):
            return NotImplemented

        return (self._bits == other._bits and
                self._terminated == other._terminated)

    def __hash__(self):
        return hash((self._bits, self._terminated))

    def __repr__(self):
        return "FibonacciCode({!r}, terminated={})".format(
            self.to_string(), self._terminated)

    def to_string(self):
        """Code as a bit string in stream order, terminator included."""
        s = "".join(str(b) for b in self._bits)
        if self._terminated:
            s += "1"

        return s

    def terminate(self):
        """Return the terminated version of this code."""
        return FibonacciCode(self._bits, terminated=True)


def check_number(n):
    """Validate a number to encode and return it as an int.

    Raises TypeError for non-integers, ValueError for zero and negative
    numbers and CodeOverflowError above 64 bits.
    """
    if not isinstance(n, numbers.Integral) or isinstance(n, bool):
        raise TypeError("n must be an integer; got {}.".format(type(n)))

    n = int(n)
    if n == 0:
        raise ValueError("zero not encodable; Fibonacci codes are defined "
                         "for positive integers only.")
    elif n < 0:
        raise ValueError("n must be a positive integer; got {}.".format(n))
    elif n > UINT64_MAX:
        raise CodeOverflowError("n must fit in 64 bits; got {}.".format(n))

    return n


def zeckendorf_int(n):
    """Zeckendorf representation packed into an integer.

    Bit i - 1 of the result holds a_i. Raw variant of :func:`zeckendorf`
    used by the stream encoder.

    Parameters
    ----------
    n : int
        Positive integer, already validated.

    Returns
    -------
    word : int

    p : int
        Index of the largest Fibonacci term, i.e. position of a_p.
    """
    fib = FIB.values
    p = bisect_right(fib, n, lo=1) - 1

    word = 0
    i = p
    while n:
        word |= 1 << (i - 1)
        n -= fib[i]
        i = bisect_right(fib, n, lo=1, hi=i - 1) - 1

    return word, p


def zeckendorf(n):
    """Zeckendorf representation of n as an unterminated code.

    The representation is built greedily, largest Fibonacci term first.

    Parameters
    ----------
    n : int
        Positive 64-bit integer.

    Returns
    -------
    code : FibonacciCode
        Code with ``terminated=False`` and n = sum(a_i * F_i).
    """
    n = check_number(n)
    word, p = zeckendorf_int(n)

    return FibonacciCode([(word >> i) & 1 for i in range(p)],
                         terminated=False)


def encode_number(n):
    """Fibonacci code of n: Zeckendorf bits followed by a 1-bit.

    Parameters
    ----------
    n : int
        Positive 64-bit integer.

    Returns
    -------
    code : FibonacciCode

    Examples
    --------
    >>> encode_number(5).to_string()
    '00011'
    """
    return zeckendorf(n).terminate()


def code_length(n):
    """Emitted bit length of the Fibonacci code of n."""
    return FIB.largest_index(check_number(n)) + 1


def value(bits, k=0):
    """Value of the extended Fibonacci code sum(a_i * F_{i-k}).

    Parameters
    ----------
    bits : iterable of {0, 1}
        Value bits a_1 .. a_p, terminator excluded.

    k : int (default=0)
        Offset. Terms with i - k < 0 contribute nothing.

    Returns
    -------
    v : int
    """
    if k < 0:
        raise ValueError("k must be >= 0; got {}.".format(k))

    v = 0
    for i, a in enumerate(bits, 1):
        if a:
            v += FIB[i - k]

    if v > UINT64_MAX:
        raise CodeOverflowError("code value exceeds 64 bits.")

    return v


def shift_right_value(n, k):
    """V(F(n) >>_F k): value of the code of n with its first k positions
    dropped from valuation.

    Parameters
    ----------
    n : int
        Positive integer.

    k : int
        Non-negative shift.

    Returns
    -------
    v : int
    """
    return value(zeckendorf(n).bits, k)


def shift_left_value(n, first_shifted, k):
    """V(F(n) <<_F k) computed in constant time.

    Uses the identity V(F(n) <<_F k) = F_k * n + F_{k-1} * V(F(n) >>_F 1).

    Parameters
    ----------
    n : int
        Value of the code. 0 stands for the empty (all-zero) partial code.

    first_shifted : int
        ``shift_right_value(n, 1)``, or 0 when n = 0.

    k : int
        Number of zeros prepended to the code.

    Returns
    -------
    v : int
    """
    if k < 0:
        raise ValueError("k must be >= 0; got {}.".format(k))

    v = FIB[k] * n + FIB[k - 1] * first_shifted
    if v > UINT64_MAX:
        raise CodeOverflowError("shifted value exceeds 64 bits.")

    return v


def shift_left_value_brute(n, k):
    """V(F(n) <<_F k) by prepending k zeros and summing the code.

    Reference implementation for :func:`shift_left_value`.
    """
    if k < 0:
        raise ValueError("k must be >= 0; got {}.".format(k))

    return value((0,) * k + zeckendorf(n).bits, 0)
