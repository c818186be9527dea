"""
Decompression speedup benchmark: naive bit-by-bit decoder against the fast
table-driven decoder.
"""

# fastfib developers
# Copyright (C) 2026

import csv
import logging
import numbers
import os
import time

import numpy as np

from .datasets import PRNG_ALGORITHM
from .exceptions import DecoderMismatchError
from .fast import decode_fast
from .naive import decode_naive
from .naive import encode_stream
from .tables import build_tables


logger = logging.getLogger(__name__)


# Published speedups of the fast decoder, per collection and averaged per
# collection family.
REFERENCE_SPEEDUPS = {
    "SEQ_ALL": 3.56,
    "SEQ_VerySmall": 3.35,
    "SEQ_Small": 3.73,
    "SEQ_Large": 3.60,
    "SEQ_VeryLarge": 4.18,
    "RAND_ALL": 3.37,
    "RAND_VerySmall": 3.29,
    "RAND_Small": 3.62,
    "RAND_Large": 3.41,
    "RAND_VeryLarge": 3.56,
}

REFERENCE_AVERAGES = {"SEQ": 3.73, "RAND": 3.52}

CSV_COLUMNS = ["collection", "naive_ms", "fast_ms", "speedup"]


class BenchReport:
    """Timings of both decoders on one collection.

    Parameters
    ----------
    name : str
        Collection name.

    n_numbers : int
        Collection length.

    n_bytes : int
        Size of the encoded stream in bytes.

    naive_samples : list of int
        Wall-clock times of the naive decoder in nanoseconds.

    fast_samples : list of int
        Wall-clock times of the fast decoder in nanoseconds.
    """
    def __init__(self, name, n_numbers, n_bytes, naive_samples, fast_samples):
        self.name = name
        self.n_numbers = n_numbers
        self.n_bytes = n_bytes
        self.naive_samples = naive_samples
        self.fast_samples = fast_samples

    @property
    def repeats(self):
        return len(self.naive_samples)

    @property
    def naive_ms(self):
        """Median naive decoding time in milliseconds."""
        return float(np.median(self.naive_samples)) / 1e6

    @property
    def fast_ms(self):
        """Median fast decoding time in milliseconds."""
        return float(np.median(self.fast_samples)) / 1e6

    @property
    def speedup(self):
        """Median naive time over median fast time."""
        fast_ms = self.fast_ms
        if fast_ms == 0:
            return float("inf")

        return self.naive_ms / fast_ms

    @property
    def reference_speedup(self):
        return REFERENCE_SPEEDUPS.get(self.name)

    def to_row(self):
        return {"collection": self.name, "naive_ms": self.naive_ms,
                "fast_ms": self.fast_ms, "speedup": self.speedup}

    def __repr__(self):
        return ("BenchReport(name={!r}, naive_ms={:.3f}, fast_ms={:.3f}, "
                "speedup={:.2f})".format(self.name, self.naive_ms,
                                         self.fast_ms, self.speedup))


def _timed_runs(decode, expected, repeats, label):
    # warm-up run, checked but not timed
    if decode() != expected:
        raise DecoderMismatchError("{} decoder output differs from the "
                                   "source collection.".format(label))

    samples = []
    for _ in range(repeats):
        time_init = time.perf_counter_ns()
        result = decode()
        samples.append(time.perf_counter_ns() - time_init)

    if result != expected:
        raise DecoderMismatchError("{} decoder output differs from the "
                                   "source collection.".format(label))

    return samples


def run_benchmark(collection, repeats=5, name="collection", tables=None):
    """Time both decoders on an encoded collection.

    The collection is encoded once. Each decoder runs one untimed warm-up
    followed by ``repeats`` timed runs; both outputs must equal the
    collection.

    Parameters
    ----------
    collection : array-like of int
        Positive integers, non-empty.

    repeats : int (default=5)
        Timed runs per decoder.

    name : str (default="collection")
        Name used in the report.

    tables : MappingTables or None (default=None)
        8-bit mapping tables. If None, they are built.

    Returns
    -------
    report : BenchReport
    """
    if not isinstance(repeats, numbers.Integral) or repeats < 1:
        raise ValueError("repeats must be a positive integer; got {}."
                         .format(repeats))

    expected = np.asarray(collection).tolist()
    if not expected:
        raise ValueError("collection must not be empty.")

    if tables is None:
        tables = build_tables(8)

    data, bit_length, count = encode_stream(expected)
    logger.info("benchmarking %s: %d numbers, %d bytes encoded", name, count,
                len(data))

    naive_samples = _timed_runs(
        lambda: decode_naive(data, bit_length, count), expected, repeats,
        "naive")
    fast_samples = _timed_runs(
        lambda: decode_fast(data, count, tables), expected, repeats, "fast")

    report = BenchReport(name, count, len(data), naive_samples, fast_samples)
    logger.info("%r", report)

    return report


def geometric_sweep():
    """Values 1, 2, 4, ..., 2^31 and 2^32 - 1."""
    return [1 << i for i in range(32)] + [2 ** 32 - 1]


def per_value_profile(values, copies=10 ** 5, repeats=3, tables=None):
    """Time both decoders on streams repeating a single value.

    Parameters
    ----------
    values : list of int
        Distinct positive integers.

    copies : int (default=10**5)
        Repetitions of each value in its stream.

    repeats : int (default=3)
        Timed runs per decoder.

    tables : MappingTables or None (default=None)

    Returns
    -------
    reports : list of BenchReport
        One report per value, named after the value.
    """
    if not isinstance(copies, numbers.Integral) or copies < 1:
        raise ValueError("copies must be a positive integer; got {}."
                         .format(copies))

    if len(set(values)) != len(values):
        raise ValueError("values are not unique.")

    if tables is None:
        tables = build_tables(8)

    return [run_benchmark([int(v)] * copies, repeats=repeats, name=str(v),
                          tables=tables) for v in values]


def family_averages(reports):
    """Mean speedup per collection family (SEQ, RAND) of preset reports.

    Returns
    -------
    averages : dict
        Maps family to (mean naive_ms, mean fast_ms, mean speedup).
    """
    averages = {}
    for family in ("SEQ", "RAND"):
        members = [r for r in reports if r.name.startswith(family + "_")]
        if members:
            averages[family] = (np.mean([r.naive_ms for r in members]),
                                np.mean([r.fast_ms for r in members]),
                                np.mean([r.speedup for r in members]))

    return averages


def protocol_header(repeats):
    return ("protocol: median of {} timed runs, 1 warm-up run discarded, "
            "timer perf_counter_ns, prng {}".format(repeats, PRNG_ALGORITHM))


def format_table(reports):
    """Human-readable report table with per-family averages.

    Parameters
    ----------
    reports : list of BenchReport

    Returns
    -------
    table : str
    """
    lines = []
    if reports:
        lines.append(protocol_header(reports[0].repeats))

    lines.append("%-16s %12s %12s %9s %10s" % (
        "collection", "naive [ms]", "fast [ms]", "speedup", "reference"))
    lines.append(63 * "-")

    for r in reports:
        ref = r.reference_speedup
        lines.append("%-16s %12.1f %12.1f %8.2fx %10s" % (
            r.name, r.naive_ms, r.fast_ms, r.speedup,
            "%.2fx" % ref if ref is not None else "-"))

    averages = family_averages(reports)
    if averages:
        lines.append(63 * "-")
        for family, (naive_ms, fast_ms, speedup) in averages.items():
            lines.append("%-16s %12.1f %12.1f %8.2fx %9.2fx" % (
                "Avg. " + family, naive_ms, fast_ms, speedup,
                REFERENCE_AVERAGES[family]))

    return "\n".join(lines)


def write_csv(path, reports):
    """Write reports as CSV with columns collection, naive_ms, fast_ms,
    speedup."""
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in reports:
            writer.writerow(r.to_row())


def pin_cpu():
    """Pin the process to a single logical processor when supported.

    Returns
    -------
    pinned : bool
    """
    if not hasattr(os, "sched_setaffinity"):
        return False

    cpus = sorted(os.sched_getaffinity(0))
    try:
        os.sched_setaffinity(0, {cpus[0]})
    except OSError:
        logger.debug("could not pin the process to cpu %d", cpus[0])
        return False

    return True
