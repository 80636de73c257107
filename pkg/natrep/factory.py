# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import functools
import json
import logging
import typing as tp

import importlib_resources

from .utils.addict import Dict as AttrDict

logger = logging.getLogger(__name__)


def load_config(config_path: tp.Optional[str] = None, params: tp.Optional[tp.List[str]] = None) -> AttrDict:
    """Packaged defaults (or `config_path`) with `key.sub=value` overrides applied."""
    if config_path is None:
        text = importlib_resources.files("natrep.configs").joinpath("defaults.json").read_text()
    else:
        with open(config_path) as f:
            text = f.read()
    config = AttrDict(json.loads(text))
    if params:
        config.update_params(params)
    return config


def create_engine_from_config(rewrite_config) -> tp.Callable:
    """An `evaluate(word, trace=False)` callable bound to the configured budget."""
    engine_type = rewrite_config.get('type', None)

    assert engine_type is not None, 'type must be specified in rewrite config'

    if engine_type == 'leftmost':
        from .words.engine import DEFAULT_MAX_STEPS, DEFAULT_TRACE_TAIL, evaluate
        return functools.partial(evaluate,
                                 max_steps=rewrite_config.get('max_steps', DEFAULT_MAX_STEPS),
                                 trace_tail=rewrite_config.get('trace_tail', DEFAULT_TRACE_TAIL))
    else:
        raise NotImplementedError(f'Unknown rewrite type: {engine_type}')


def create_codec_from_config(codec_config):
    codec_type = codec_config.get('type', None)

    assert codec_type is not None, 'type must be specified in codec config'

    if codec_type == 'natural_u64':
        from .bench.fastpath import NaturalU64
        return NaturalU64()
    elif codec_type == 'standard_u64':
        from .bench.fastpath import StandardU64
        return StandardU64()
    elif codec_type == 'reference':
        from .bench.fastpath import ReferenceCodec
        return ReferenceCodec()
    else:
        raise NotImplementedError(f'Unknown codec type: {codec_type}')
