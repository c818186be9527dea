"""
Command-line interface.

Exit status: 0 success, 1 usage error, 2 data or format error, 3 internal
invariant failure.
"""

# fastfib developers
# Copyright (C) 2026

import argparse
import logging
import os
import sys

from .archive import read_archive
from .archive import write_archive
from .base import FibonacciCodec
from .bench import format_table
from .bench import geometric_sweep
from .bench import per_value_profile
from .bench import pin_cpu
from .bench import run_benchmark
from .bench import write_csv
from .datasets import DEFAULT_LENGTH
from .datasets import PRESETS
from .datasets import PRNG_ALGORITHM
from .datasets import make_collection
from .datasets import read_raw
from .datasets import write_raw
from .exceptions import DecoderMismatchError
from .tables import MAX_SEGMENT_SIZE
from .tables import MIN_SEGMENT_SIZE
from .tables import build_tables
from .tables import format_record


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid int value: {!r}"
                                         .format(text))

    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer; got {}"
                                         .format(value))

    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid int value: {!r}"
                                         .format(text))

    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0; got {}".format(value))

    return value


def cmd_encode(args):
    values = read_raw(args.input)
    stream = FibonacciCodec().encode(values)
    write_archive(args.output, stream)

    raw_size = os.path.getsize(args.input)
    ratio = "%.4f" % (len(stream.data) / raw_size) if raw_size else "n/a"
    print("encoded %d numbers: raw %d bytes, compressed %d bytes, ratio %s"
          % (stream.count, raw_size, len(stream.data), ratio))

    return EXIT_OK


def cmd_decode(args):
    header, payload = read_archive(args.input)

    codec = FibonacciCodec(decoder=args.algo)
    values = codec.decode(payload, header.payload_bit_length,
                          header.number_count)
    write_raw(args.output, values)

    print("decoded %d numbers (%s decoder)" % (len(values), args.algo))

    return EXIT_OK


def cmd_gen(args):
    values = make_collection(args.kind, length=args.length, seed=args.seed)
    write_raw(args.output, values)

    print("generated %s: %d numbers, seed %d, prng %s"
          % (args.kind, len(values), args.seed, PRNG_ALGORITHM))

    return EXIT_OK


def cmd_bench(args):
    if pin_cpu():
        logger.info("pinned to a single logical processor")

    tables = build_tables(8)
    reports = []

    if args.input is not None:
        values = read_raw(args.input)
        reports.append(run_benchmark(values, repeats=args.repeats,
                                     name=os.path.basename(args.input),
                                     tables=tables))
    elif not args.profile or args.kind:
        for kind in (args.kind or list(PRESETS)):
            values = make_collection(kind, length=args.length, seed=args.seed)
            reports.append(run_benchmark(values, repeats=args.repeats,
                                         name=kind, tables=tables))

    if args.profile:
        reports.extend(per_value_profile(geometric_sweep(),
                                         copies=args.copies,
                                         repeats=args.repeats, tables=tables))

    print(format_table(reports))

    if args.report is not None:
        write_csv(args.report, reports)

    return EXIT_OK


def cmd_table(args):
    tables = build_tables(args.segment_size)

    if args.stats:
        max_count = max(r.count for r in tables.map1 + tables.map2)
        print("segment size %d: %d records per table, %d distinct records, "
              "max count %d" % (tables.segment_size, tables.n_records,
                                tables.n_distinct_records, max_count))
        return EXIT_OK

    if args.index is None:
        args.parser.error("--index is required unless --stats is given")

    if not 0 <= args.index < tables.n_records:
        args.parser.error("--index must be in [0, {}]; got {}".format(
            tables.n_records - 1, args.index))

    record = tables.record(args.map, args.index)
    print("%s first_shifted=%d" % (format_record(record),
                                   record.first_shifted))

    return EXIT_OK


def build_parser():
    parser = _ArgumentParser(
        prog="fastfib",
        description="Fibonacci coding with fast table-driven decompression.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (twice for debug output)")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    p = subparsers.add_parser("encode", help="encode a raw-number file")
    p.add_argument("input", help="raw-number file")
    p.add_argument("output", help="archive file")
    p.set_defaults(func=cmd_encode)

    p = subparsers.add_parser("decode", help="decode an archive")
    p.add_argument("input", help="archive file")
    p.add_argument("output", help="raw-number file")
    p.add_argument("--algo", choices=("fast", "naive"), default="fast",
                   help="decoder (default: fast)")
    p.set_defaults(func=cmd_decode)

    p = subparsers.add_parser("gen", help="generate a test collection")
    p.add_argument("output", help="raw-number file")
    p.add_argument("--kind", choices=list(PRESETS), required=True,
                   help="collection preset")
    p.add_argument("--seed", type=_non_negative_int, default=0,
                   help="seed of RAND presets (default: 0)")
    p.add_argument("--length", type=_non_negative_int,
                   default=DEFAULT_LENGTH,
                   help="number of values (default: %d)" % DEFAULT_LENGTH)
    p.set_defaults(func=cmd_gen)

    p = subparsers.add_parser("bench", help="decompression speedup benchmark")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--kind", choices=list(PRESETS), action="append",
                        help="collection preset, repeatable (default: all)")
    source.add_argument("--input", help="raw-number file to benchmark")
    p.add_argument("--repeats", type=_positive_int, default=5,
                   help="timed runs per decoder (default: 5)")
    p.add_argument("--report", help="write a CSV report to this path")
    p.add_argument("--seed", type=_non_negative_int, default=0,
                   help="seed of RAND presets (default: 0)")
    p.add_argument("--length", type=_positive_int, default=DEFAULT_LENGTH,
                   help="collection length (default: %d)" % DEFAULT_LENGTH)
    p.add_argument("--profile", action="store_true",
                   help="add the per-value profile over 1, 2, 4, ..., "
                        "2^32 - 1")
    p.add_argument("--copies", type=_positive_int, default=10 ** 5,
                   help="copies per value in the profile (default: 100000)")
    p.set_defaults(func=cmd_bench)

    p = subparsers.add_parser("table", help="print a mapping-table record")
    p.add_argument("--map", type=int, choices=(1, 2), default=1,
                   help="MAP1 or MAP2 (default: 1)")
    p.add_argument("--index", type=int, help="segment value")
    p.add_argument("--segment-size", type=int, default=8,
                   choices=range(MIN_SEGMENT_SIZE, MAX_SEGMENT_SIZE + 1),
                   metavar="S", help="segment size in bits (default: 8)")
    p.add_argument("--stats", action="store_true",
                   help="print table size statistics")
    p.set_defaults(func=cmd_table, parser=p)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(name)s: %(message)s")

    try:
        return args.func(args)
    except DecoderMismatchError as e:
        print("fastfib: correctness failure: {}".format(e), file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OverflowError, OSError) as e:
        print("fastfib: error: {}".format(e), file=sys.stderr)
        return EXIT_DATA
    except AssertionError as e:
        print("fastfib: internal error: {}".format(e), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
