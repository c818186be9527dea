"""
Bit reader and writer testing.
"""

# fastfib developers
# Copyright (C) 2026

from pytest import raises

from fastfib.bitstream import BitReader
from fastfib.bitstream import BitWriter
from fastfib.bitstream import resegment
from fastfib.bitstream import segments
from fastfib.exceptions import TruncatedStreamError
from fastfib.fibonacci import encode_number
from fastfib.fibonacci import zeckendorf


def test_write_code():
    writer = BitWriter()
    writer.write_code(encode_number(4)).write_code(encode_number(7))

    data = writer.getvalue()
    assert writer.bit_length == 9
    assert data[0] == 173
    assert data[1] == 1


def test_write_code_ones():
    writer = BitWriter()
    for _ in range(4):
        writer.write_code(encode_number(1))

    assert writer.getvalue() == b"\xff"
    assert len(writer) == 8


def test_write_empty():
    writer = BitWriter()

    assert writer.getvalue() == b""
    assert writer.bit_length == 0


def test_write_unterminated():
    with raises(ValueError):
        BitWriter().write_code(zeckendorf(4))


def test_byte_value_identity():
    bits = [1, 0, 1, 1, 0, 1, 0, 1]
    writer = BitWriter()
    for b in bits:
        writer.write_bit(b)

    assert writer.getvalue()[0] == sum(b << j for j, b in enumerate(bits))


def test_write_bits_long(random_state):
    bits = random_state.randint(0, 2, size=1000).tolist()

    writer = BitWriter()
    i = 0
    for n_bits in [1, 7, 64, 3, 100, 13] * 10:
        chunk = bits[i:i + n_bits]
        word = sum(b << j for j, b in enumerate(chunk))
        writer.write_bits(word, len(chunk))
        i += n_bits

    data = writer.getvalue()
    assert writer.bit_length == len(bits)
    assert len(data) == (len(bits) + 7) // 8
    assert list(BitReader(data, writer.bit_length)) == bits


def test_read_bit():
    reader = BitReader(bytes([173]))
    assert reader.read_bit() == 1
    assert reader.read_bit() == 0
    assert reader.cursor == 2
    assert reader.remaining == 6

    assert BitReader(bytes([0])).read_bit() == 0


def test_read_past_end():
    reader = BitReader(bytes([255]), bit_length=2)
    reader.read_bit()
    reader.read_bit()

    with raises(TruncatedStreamError):
        reader.read_bit()

    with raises(TruncatedStreamError):
        BitReader(b"").read_bit()


def test_reader_bit_length():
    with raises(ValueError):
        BitReader(bytes([1]), bit_length=9)

    with raises(ValueError):
        BitReader(bytes([1]), bit_length=-1)


def test_round_trip(random_state):
    for length in (0, 1, 8, 9, 63, 64, 65, 500):
        bits = random_state.randint(0, 2, size=length).tolist()

        writer = BitWriter()
        for b in bits:
            writer.write_bit(b)

        reader = BitReader(writer.getvalue(), writer.bit_length)
        assert [reader.read_bit() for _ in range(length)] == bits


def test_padding_is_zero():
    writer = BitWriter()
    writer.write_code(encode_number(1))

    assert writer.getvalue() == bytes([3])
    assert writer.bit_length == 2


def test_segments():
    assert segments(bytes([173, 165])) == (173, 165)
    assert segments(b"") == ()
    assert segments(bytearray([0xff])) == (255,)


def test_resegment():
    assert resegment(bytes([173, 165]), 16, 8) == [173, 165]
    assert resegment(bytes([173]), 8, 4) == [13, 10]
    assert resegment(bytes([173]), 6, 4) == [13, 2]
    assert resegment(bytes([173, 1]), 9, 3) == [5, 5, 6]
    assert resegment(b"", 0, 5) == []
