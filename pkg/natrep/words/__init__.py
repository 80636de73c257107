from .word import (DIAMOND, EMPTY, ONE, TWO_V, Factor, Pair, Symbol, Word, close, concat,
                   division_word, expr_add_int, expr_sub_int, format_word, has_pair, int_word,
                   integer_part_word, integer_value, is_integer_word, is_natural_word, lower,
                   mul_start, multiplication_word, natural_word, parse_word, rational_open_word)
from .rules import RULES, RULES_BY_ID, Match, Rule
from .engine import Trace, TraceStep, evaluate, rewrite_step
from .valuate import (DivisionReport, as_natrep, division_report, parse_normal_form, read_word, segment_value,
                      strip_spent, valuate)
