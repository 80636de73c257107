from .surd import Surd, parse_surd
from .digits import (CODECS, ComparisonRow, cf_digits, compare_codecs, convergent_error, convergents, digits,
                     nat_digits)
