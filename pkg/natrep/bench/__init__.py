from .fastpath import (FastCodec, NaturalU64, ReferenceCodec, StandardU64, cf_decode_u64, cf_encode_u64,
                       nat_decode_u64, nat_encode_u64)
from .suite import COLUMNS, BenchRow, build_metadata, emit, fib, run_suite
