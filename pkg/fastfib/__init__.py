from .base import FibonacciCodec
from .datasets import CollectionSpec
from .datasets import generate
from .datasets import make_collection
from .fast import DecoderState
from .fast import decode_fast
from .fibonacci import FIB
from .fibonacci import FibonacciCode
from .fibonacci import encode_number
from .fibonacci import zeckendorf
from .naive import decode_naive
from .naive import encode_stream
from .tables import MapRecord
from .tables import MappingTables
from .tables import build_tables

__all__ = ["FibonacciCodec",
           "CollectionSpec",
           "generate",
           "make_collection",
           "DecoderState",
           "decode_fast",
           "FIB",
           "FibonacciCode",
           "encode_number",
           "zeckendorf",
           "decode_naive",
           "encode_stream",
           "MapRecord",
           "MappingTables",
           "build_tables"]
