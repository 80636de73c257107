from .ratcodec import (EQUAL, GREATER, LESS, NatRep, Ratio, cf_convergents, cf_encode, cf_eval,
                       cf_normalize, check_valid, compare, decode, encode, encode_nonneg, encode_signed,
                       eval_nonneg, eval_signed, examples_table, height, is_valid, natrep_convergents,
                       reference_decode, reference_encode)
from .text import format_ratio, format_sequence, parse_ratio, parse_sequence
