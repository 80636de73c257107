# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""`natrep` command line.

Exit status is 0 on success, 1 when the library rejects the input and 2 on
usage errors. Everything on stdout is exact text; status lines and errors go
to stderr.
"""

import argparse
import logging
import re
import sys
import typing as tp

from ..errors import NatRepError, ParseError, RangeError

logger = logging.getLogger(__name__)

PROG = "natrep"

_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class UsageError(Exception):
    def __init__(self, usage: str, message: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so `dispatch` can choose the exit status.

    Negative ratios such as -7/3 are read as values, not as options.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message):
        raise UsageError(" ".join(self.format_usage().split()), message)


def _fib_list(text: str) -> tp.List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Natural representation of rational numbers")
    parser.add_argument('--config', type=str, default=None, help='JSON config replacing the packaged defaults')
    parser.add_argument('--params', type=str, action='append', default=[], metavar='KEY=VALUE',
                        help='Override one config entry, e.g. rewrite.max_steps=500 (repeatable)')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level and show progress bars')
    commands = parser.add_subparsers(dest='command', metavar='command', parser_class=_Parser)
    commands.required = True

    p = commands.add_parser('encode', help='Natural representation of N/D')
    p.add_argument('ratio', type=str)
    p = commands.add_parser('decode', help='Value of a natural representation')
    p.add_argument('sequence', type=str)
    p = commands.add_parser('cf', help='Standard continued fraction of N/D')
    p.add_argument('ratio', type=str)
    p = commands.add_parser('cf-eval', help='Value of a standard continued fraction')
    p.add_argument('sequence', type=str)
    p = commands.add_parser('compare', help='Order of two natural representations: <, = or >')
    p.add_argument('left', type=str)
    p.add_argument('right', type=str)
    p = commands.add_parser('table', help='Every reduced ±N/D up to the limits with its representation')
    p.add_argument('--max-num', type=int, default=10)
    p.add_argument('--max-den', type=int, default=10)

    tree = commands.add_parser('tree', help='Extended Stern-Brocot tree')
    tree_commands = tree.add_subparsers(dest='tree_command', metavar='tree_command', parser_class=_Parser)
    tree_commands.required = True
    p = tree_commands.add_parser('level', help='Nodes of level H in value order')
    p.add_argument('height', type=int)
    p.add_argument('--dot', action='store_true', help='Print levels 1..H as a DOT graph')
    p = tree_commands.add_parser('children', help='Children of a node with their edge labels')
    p.add_argument('sequence', type=str)
    p = tree_commands.add_parser('route', help='Edge labels and word from the root to a node')
    p.add_argument('sequence', type=str)
    p = tree_commands.add_parser('node', help='Node I of level H')
    p.add_argument('height', type=int)
    p.add_argument('index', type=int)
    p = tree_commands.add_parser('symmetry', help='Mirror pairs of a level around an anchor, as JSON')
    p.add_argument('--anchor', type=str, required=True, help='One of -2, -1, -1/2, 0, 1')
    p.add_argument('--height', type=int, required=True)

    sets = commands.add_parser('set', help='Words over 1, D, V and pairs')
    set_commands = sets.add_subparsers(dest='set_command', metavar='set_command', parser_class=_Parser)
    set_commands.required = True
    p = set_commands.add_parser('lower', help='The hereditarily finite set a word denotes')
    p.add_argument('word', type=str)
    p = set_commands.add_parser('eval', help='Normal form of a word')
    p.add_argument('word', type=str)
    p.add_argument('--trace', action='store_true', help='Print every rewrite step before the normal form')
    p.add_argument('--max-steps', type=int, default=None)
    p = set_commands.add_parser('dot', help='Membership graph of the set a word denotes')
    p.add_argument('word', type=str)

    p = commands.add_parser('approx', help='Digits and convergents of a quadratic surd')
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--sqrt', type=int, help='Approximate √D')
    target.add_argument('--surd', type=str, help='sqrt(D), phi or a ratio')
    p.add_argument('--terms', type=int, default=None)
    p.add_argument('--codec', type=str, choices=['natural', 'standard'], default=None)
    p.add_argument('--compare', action='store_true',
                   help='Compare k-term natural with 2k-term standard convergents')

    p = commands.add_parser('bench', help='Fibonacci ratio encode/decode timings')
    p.add_argument('--fib', type=_fib_list, default=None, help='Comma separated indices, e.g. 5,10,20')
    p.add_argument('--iters', type=int, default=None)
    p.add_argument('--format', type=str, choices=['csv', 'json'], default=None)
    p.add_argument('--out', type=str, default=None, help='Write to FILE instead of stdout')
    p.add_argument('--meta', action='store_true', help='Include python/platform build metadata')
    p.add_argument('--reference', action='store_true', help='Also time the recursive reference codec')
    return parser


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _encode(args, config):
    from ..codec import encode, format_sequence, parse_ratio
    _out(format_sequence(encode(parse_ratio(args.ratio))))


def _decode(args, config):
    from ..codec import decode, format_ratio, parse_sequence
    _out(format_ratio(decode(parse_sequence(args.sequence))))


def _cf(args, config):
    from ..codec import cf_encode, format_sequence, parse_ratio
    _out(format_sequence(cf_encode(parse_ratio(args.ratio))))


def _cf_eval(args, config):
    from ..codec import cf_eval, format_ratio, parse_sequence
    _out(format_ratio(cf_eval(parse_sequence(args.sequence))))


def _compare(args, config):
    from ..codec import compare, parse_sequence
    order = compare(parse_sequence(args.left), parse_sequence(args.right))
    _out({-1: "<", 0: "=", 1: ">"}[order])


def _table(args, config):
    from ..codec import examples_table, format_ratio, format_sequence
    rows = examples_table(args.max_num, args.max_den)
    width = max((len(format_ratio(q)) for q, _, _ in rows), default=0)
    lines = [f"{format_ratio(q):>{width}}  {format_sequence(s)}" for q, s, _ in rows]
    _out("\n".join(lines))


def _tree(args, config):
    from ..codec import decode, format_ratio, format_sequence, parse_sequence
    from ..tree import check_symmetry, children, level, node_at, route, route_word, to_dot, tree_node
    from ..words import format_word

    max_height = config.tree.max_height
    if args.tree_command == 'level':
        if args.dot:
            _out(to_dot(args.height, max_height=max_height))
            return
        nodes = level(args.height, max_height=max_height)
        texts = [format_sequence(s) for s in nodes]
        iw, sw = len(str(len(nodes) - 1)), max(len(t) for t in texts)
        _out("\n".join(f"{i:>{iw}}  {t:<{sw}}  {format_ratio(decode(s))}".rstrip()
                       for i, (s, t) in enumerate(zip(nodes, texts))))
    elif args.tree_command == 'children':
        rows = children(parse_sequence(args.sequence))
        _out("\n".join(f"{label.value:<3}  {format_sequence(s)}  {format_ratio(decode(s))}" for s, label in rows))
    elif args.tree_command == 'route':
        s = parse_sequence(args.sequence)
        node = tree_node(s)
        labels = " ".join(label.value for label in route(s))
        _out(f"height: {node.height}\nindex: {node.index}\nlabels: {labels}\nword: {format_word(route_word(s))}")
    elif args.tree_command == 'node':
        s = node_at(args.height, args.index)
        _out(f"{format_sequence(s)}  {format_ratio(decode(s))}")
    elif args.tree_command == 'symmetry':
        from ..codec import parse_ratio
        report = check_symmetry(parse_ratio(args.anchor), args.height, max_height=max_height)
        _out(report.to_json())


def _set(args, config):
    from ..factory import create_engine_from_config
    from ..sets import set_node_budget, to_dot
    from ..words import format_word, lower, parse_word

    set_node_budget(config.hfset.node_budget)
    word = parse_word(args.word)
    if args.set_command == 'lower':
        _out(lower(word).text)
    elif args.set_command == 'dot':
        _out(to_dot(lower(word)))
    elif args.set_command == 'eval':
        rewrite_config = config.rewrite
        if args.max_steps is not None:
            if args.max_steps < 1:
                raise RangeError(f"--max-steps must be positive, got {args.max_steps}")
            rewrite_config.max_steps = args.max_steps
        evaluate = create_engine_from_config(rewrite_config)
        if args.trace:
            normal_form, trace = evaluate(word, trace=True)
            lines = [str(step) for step in trace] + [format_word(normal_form)]
            _out("\n".join(lines))
        else:
            _out(format_word(evaluate(word)))


def _approx(args, config):
    from ..approx import Surd, compare_codecs, convergent_error, digits, parse_surd
    from ..codec import format_ratio, format_sequence

    x = Surd.sqrt(args.sqrt) if args.sqrt is not None else parse_surd(args.surd)
    terms = args.terms if args.terms is not None else config.approx.terms
    codec = args.codec or config.approx.codec
    if args.compare:
        rows = compare_codecs(x, terms)
        lines = ["k  natural  natural_error  standard  standard_error"]
        lines += [f"{r.k}  {format_ratio(r.natural)}  {r.natural_error}  {format_ratio(r.standard)}  {r.standard_error}"
                  for r in rows]
        _out("\n".join(lines))
        return
    ds = digits(x, terms, codec)
    value, error = convergent_error(x, ds, codec)
    _out(f"digits: {format_sequence(ds)}\nconvergent: {format_ratio(value)}\nerror: {error}")


def _bench(args, config):
    from ..bench import build_metadata, emit, run_suite
    from ..factory import create_codec_from_config

    bench = config.bench
    rows = run_suite(args.fib if args.fib is not None else bench.fib,
                     iterations=args.iters if args.iters is not None else bench.iterations,
                     warmup=bench.warmup,
                     repeats=bench.repeats,
                     natural=create_codec_from_config(bench.codecs.natural),
                     standard=create_codec_from_config(bench.codecs.standard),
                     reference=args.reference,
                     verbose=args.verbose)
    text = emit(rows, args.format or bench.format, meta=build_metadata() if args.meta else None)
    if args.out is None:
        _out(text)
        return
    with open(args.out, "w") as f:
        f.write(text)
    print(f"[INFO(bench)] wrote {len(rows)} rows to {args.out}", file=sys.stderr)


_HANDLERS = {
    'encode': _encode,
    'decode': _decode,
    'cf': _cf,
    'cf-eval': _cf_eval,
    'compare': _compare,
    'table': _table,
    'tree': _tree,
    'set': _set,
    'approx': _approx,
    'bench': _bench,
}


def dispatch(argv: tp.Optional[tp.Sequence[str]] = None) -> int:
    from ..factory import load_config

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"{e.usage} error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        config = load_config(args.config, args.params)
        _HANDLERS[args.command](args, config)
    except ParseError as e:
        print(f"{' '.join(parser.format_usage().split())} error: {e}", file=sys.stderr)
        return 2
    except NatRepError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"[WARNING({args.command})] {e}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
