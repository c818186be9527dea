"""
Archive file format: fixed header followed by the LSB-first payload.

Layout, little-endian::

    magic               4 bytes  b"FFC1"
    version             1 byte   1
    segment_size        1 byte   8
    number_count        8 bytes  uint64
    payload_bit_length  8 bytes  uint64
    payload             ceil(payload_bit_length / 8) bytes
"""

# fastfib developers
# Copyright (C) 2026

import struct

from collections import namedtuple

from .exceptions import ArchiveFormatError


MAGIC = b"FFC1"
VERSION = 1
SEGMENT_SIZE = 8

_HEADER = struct.Struct("<4sBBQQ")
HEADER_SIZE = _HEADER.size


class ArchiveHeader(namedtuple("ArchiveHeader", ["magic", "version",
                                                 "segment_size",
                                                 "number_count",
                                                 "payload_bit_length"])):
    """Archive header fields."""
    __slots__ = ()

    @classmethod
    def for_stream(cls, bit_length, count):
        return cls(MAGIC, VERSION, SEGMENT_SIZE, count, bit_length)

    @property
    def payload_size(self):
        """Payload size in bytes."""
        return (self.payload_bit_length + 7) // 8

    def pack(self):
        return _HEADER.pack(*self)

    @classmethod
    def unpack(cls, data):
        if len(data) < HEADER_SIZE:
            raise ArchiveFormatError("archive is shorter than its {}-byte "
                                     "header.".format(HEADER_SIZE))

        header = cls(*_HEADER.unpack_from(data))

        if header.magic != MAGIC:
            raise ArchiveFormatError("bad magic {!r}; expected {!r}."
                                     .format(header.magic, MAGIC))

        if header.version != VERSION:
            raise ArchiveFormatError("unsupported archive version {}."
                                     .format(header.version))

        if header.segment_size != SEGMENT_SIZE:
            raise ArchiveFormatError("unsupported segment size {}."
                                     .format(header.segment_size))

        return header


def dumps(stream):
    """Serialize an encoded stream (data, bit_length, count) to bytes."""
    data, bit_length, count = stream
    header = ArchiveHeader.for_stream(bit_length, count)

    if len(data) != header.payload_size:
        raise ValueError("payload holds {} bytes; {} bits need {}."
                         .format(len(data), bit_length, header.payload_size))

    return header.pack() + bytes(data)


def loads(data):
    """Parse archive bytes.

    Parameters
    ----------
    data : bytes

    Returns
    -------
    header : ArchiveHeader

    payload : bytes
    """
    header = ArchiveHeader.unpack(data)
    payload = bytes(data[HEADER_SIZE:])

    if len(payload) != header.payload_size:
        raise ArchiveFormatError("payload holds {} bytes; header declares {} "
                                 "bits ({} bytes).".format(
                                     len(payload), header.payload_bit_length,
                                     header.payload_size))

    # every code takes at least two bits
    if header.number_count > header.payload_bit_length // 2:
        raise ArchiveFormatError("header declares {} numbers but the payload "
                                 "holds at most {}.".format(
                                     header.number_count,
                                     header.payload_bit_length // 2))

    return header, payload


def write_archive(path, stream):
    """Write an encoded stream to an archive file."""
    with open(path, "wb") as f:
        f.write(dumps(stream))


def read_archive(path):
    """Read an archive file, see :func:`loads`."""
    with open(path, "rb") as f:
        return loads(f.read())
