"""
Exceptions raised by fastfib.
"""

# fastfib developers
# Copyright (C) 2026


class FibonacciError(Exception):
    """Base class for all fastfib errors."""


class CodeOverflowError(FibonacciError, OverflowError):
    """A decoded value or Fibonacci index does not fit in 64 bits.

    Raised on malformed or oversized codes. Genuine codes of 64-bit values
    never trigger it.
    """


class TruncatedStreamError(FibonacciError, ValueError):
    """The compressed stream ended before the declared number count."""


class ArchiveFormatError(FibonacciError, ValueError):
    """Invalid archive or raw-number file."""


class DecoderMismatchError(FibonacciError, AssertionError):
    """A decoder output differed from the source collection."""
