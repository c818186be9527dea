"""
Archive format testing.
"""

# fastfib developers
# Copyright (C) 2026

import struct

from pytest import raises

from fastfib.archive import HEADER_SIZE
from fastfib.archive import MAGIC
from fastfib.archive import ArchiveHeader
from fastfib.archive import dumps
from fastfib.archive import loads
from fastfib.archive import read_archive
from fastfib.archive import write_archive
from fastfib.exceptions import ArchiveFormatError
from fastfib.naive import decode_naive
from fastfib.naive import encode_stream


def test_header_layout():
    data = dumps(encode_stream([4, 7, 86]))

    assert HEADER_SIZE == 22
    assert data[:4] == b"FFC1"
    assert data[4] == 1
    assert data[5] == 8
    assert struct.unpack("<Q", data[6:14]) == (3,)
    assert struct.unpack("<Q", data[14:22]) == (19,)
    assert data[22:] == bytes([173, 165, 6])


def test_loads():
    header, payload = loads(dumps(encode_stream([4, 7, 86])))

    assert header.magic == MAGIC
    assert header.number_count == 3
    assert header.payload_bit_length == 19
    assert header.payload_size == 3
    assert payload == bytes([173, 165, 6])


def test_empty_archive():
    data = dumps(encode_stream([]))
    header, payload = loads(data)

    assert len(data) == HEADER_SIZE
    assert header.number_count == 0
    assert payload == b""


def test_file_round_trip(tmp_path, random_state):
    values = random_state.randint(1, 2 ** 64 - 1, size=200,
                                  dtype="uint64").tolist()
    path = tmp_path / "values.ffc"
    write_archive(path, encode_stream(values))

    header, payload = read_archive(path)
    assert decode_naive(payload, header.payload_bit_length,
                        header.number_count) == values


def test_dumps_size_mismatch():
    with raises(ValueError):
        dumps((bytes([173, 165]), 19, 3))


def test_bad_magic():
    data = bytearray(dumps(encode_stream([4, 7, 86])))
    data[:4] = b"FFC0"

    with raises(ArchiveFormatError):
        loads(bytes(data))


def test_bad_version_and_segment_size():
    header = ArchiveHeader.for_stream(19, 3)

    data = header._replace(version=2).pack() + bytes(3)
    with raises(ArchiveFormatError):
        loads(data)

    data = header._replace(segment_size=16).pack() + bytes(3)
    with raises(ArchiveFormatError):
        loads(data)


def test_short_archive():
    with raises(ArchiveFormatError):
        loads(b"FFC1\x01")

    data = dumps(encode_stream([4, 7, 86]))
    with raises(ArchiveFormatError):
        loads(data[:-1])

    with raises(ArchiveFormatError):
        loads(data + b"\x00")


def test_count_exceeds_payload():
    data = ArchiveHeader.for_stream(4, 3).pack() + bytes([0x0f])

    with raises(ArchiveFormatError):
        loads(data)
