"""
Mapping tables testing.
"""

# fastfib developers
# Copyright (C) 2026

from pytest import raises

from fastfib.fibonacci import encode_number
from fastfib.fibonacci import shift_right_value
from fastfib.fibonacci import zeckendorf
from fastfib.tables import MapRecord
from fastfib.tables import build_record
from fastfib.tables import build_tables
from fastfib.tables import format_record
from fastfib.tables import record_lookup


def _bits(index, n_bits):
    return [(index >> j) & 1 for j in range(n_bits)]


def _reconstruct(record):
    """Bit string spelled by the numbers of a record."""
    complete = record.numbers[:-1] if record.shift else record.numbers
    text = "".join(encode_number(n).to_string() for n in complete)

    if record.shift:
        partial = record.numbers[-1]
        bits = zeckendorf(partial).bits if partial else ()
        assert len(bits) <= record.shift
        text += "".join(str(b) for b in bits).ljust(record.shift, "0")

    return text


def test_worked_example_map1(tables):
    record = tables.map1[173]

    assert record[:5] == (2, (4, 7), 4, False, False)
    assert record.first_shifted == 3
    assert format_record(record) == "{2,(4,7),4,False,False}"


def test_worked_example_map2(tables):
    record = tables.map2[165]

    assert record[:5] == (1, (31,), 7, False, False)
    assert record.first_shifted == 19
    assert format_record(record) == "{1,(31),7,False,False}"


def test_build_record():
    assert build_record(_bits(173, 8)) == MapRecord(2, (4, 7), 4, False,
                                                    False, 3)

    assert build_record([0] * 8) == MapRecord(1, (0,), 8, True, True, 0)
    assert build_record([1] * 8) == MapRecord(4, (1, 1, 1, 1), 0, False,
                                              False, 1)

    # 011 00000: F(2) then an empty partial
    assert build_record(_bits(6, 8)) == MapRecord(2, (2, 0), 5, True, True, 1)

    with raises(ValueError):
        build_record([])


def test_map2():
    tables = build_tables(8)

    assert tables.map2[172] is tables.map1[172]
    assert all(tables.map2[i] is tables.map1[i] for i in range(0, 256, 2))

    assert tables.map2[1][:5] == (1, (0,), 7, True, False)
    assert tables.map2[0] == tables.map1[0]


def test_record_lookup(tables):
    assert record_lookup(tables, 1, 173) is tables.map1[173]
    assert record_lookup(tables, 2, 165) is tables.map2[165]
    assert record_lookup(tables, 2, 0) is tables.map1[0]

    with raises(IndexError):
        record_lookup(tables, 1, 256)

    with raises(IndexError):
        record_lookup(tables, 1, -1)

    with raises(ValueError):
        record_lookup(tables, 3, 0)


def test_build_tables_params():
    for segment_size in (0, 1, 17, 8.0, "8"):
        with raises(ValueError):
            build_tables(segment_size)


def test_build_tables_cache():
    assert build_tables(8) is build_tables(8)
    assert build_tables(4).segment_size == 4
    assert build_tables(4).n_records == 16


def test_table_size(tables):
    assert tables.n_records == 256
    assert tables.n_distinct_records == 384
    assert len(tables.map1) == len(tables.map2) == 256


def test_format_record(tables):
    assert format_record(tables.map1[0]) == "{1,(0),8,True,True}"
    assert format_record(tables.map1[255]) == "{4,(1,1,1,1),0,False,False}"


def test_record_reconstruction(tables):
    for i in range(256):
        bits = "".join(str(b) for b in _bits(i, 8))

        assert _reconstruct(tables.map1[i]) == bits

        if i & 1:
            assert _reconstruct(tables.map2[i]) == bits[1:]


def test_bit_accounting(tables):
    def n_bits(record):
        complete = record.numbers[:-1] if record.shift else record.numbers
        return sum(len(encode_number(n)) for n in complete) + record.shift

    for i in range(256):
        assert n_bits(tables.map1[i]) == 8
        if i & 1:
            assert n_bits(tables.map2[i]) == 7


def test_flags(tables):
    for i in range(256):
        record = tables.map1[i]
        assert record.start_with_zero == (i % 2 == 0)
        assert record.end_with_zero == (not (i >> 7) & 1)

        if i & 1:
            assert not tables.map2[i].start_with_zero
            assert tables.map2[i].end_with_zero == record.end_with_zero


def test_count_bound():
    for segment_size in range(2, 13):
        tables = build_tables(segment_size)
        max_count = max(r.count for r in tables.map1 + tables.map2)

        assert max_count == -(-segment_size // 2)
        assert all(r.count == len(r.numbers) for r in tables.map1)


def test_first_shifted(tables):
    for record in tables.map1 + tables.map2:
        first = record.numbers[0]
        if first:
            assert record.first_shifted == shift_right_value(first, 1)
        else:
            assert record.first_shifted == 0
