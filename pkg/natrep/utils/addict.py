# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.
# trimmed from addict (https://github.com/mewwts/addict) under the MIT license,
# with update_params() for command-line overrides.
# LICENSE is in LICENSES directory.

import ast
import logging
import typing as tp

logger = logging.getLogger(__name__)


class Dict(dict):
    """Dot-accessible nested dictionary used for every natrep config.

    Reading a missing key gives an empty Dict that attaches itself to its
    parent on the first write, so `config.a.b = 1` creates `a`.
    """

    def __init__(__self, *args, **kwargs):
        object.__setattr__(__self, '__parent', kwargs.pop('__parent', None))
        object.__setattr__(__self, '__key', kwargs.pop('__key', None))
        for arg in args:
            if not arg:
                continue
            elif isinstance(arg, dict):
                for key, val in arg.items():
                    __self[key] = __self._hook(val)
            else:
                for key, val in iter(arg):
                    __self[key] = __self._hook(val)

        for key, val in kwargs.items():
            __self[key] = __self._hook(val)

    def __setattr__(self, name, value):
        if hasattr(self.__class__, name):
            raise AttributeError(f"'Dict' object attribute '{name}' is read-only")
        self[name] = value

    def __setitem__(self, name, value):
        super().__setitem__(name, value)
        try:
            parent = object.__getattribute__(self, '__parent')
            key = object.__getattribute__(self, '__key')
        except AttributeError:
            parent = None
            key = None
        if parent is not None:
            parent[key] = self
            object.__delattr__(self, '__parent')
            object.__delattr__(self, '__key')

    @classmethod
    def _hook(cls, item):
        if isinstance(item, dict):
            return cls(item)
        elif isinstance(item, (list, tuple)):
            return type(item)(cls._hook(elem) for elem in item)
        return item

    def __getattr__(self, item):
        return self.__getitem__(item)

    def __missing__(self, name):
        return self.__class__(__parent=self, __key=name)

    def __delattr__(self, name):
        del self[name]

    @staticmethod
    def str_to_bool(value: str) -> tp.Optional[bool]:
        """Converts string to boolean if applicable."""
        if value.lower() == 'true':
            return True
        elif value.lower() == 'false':
            return False
        return None

    def update_params(self, params: tp.List[str]):
        """Overrides self contents with `key.sub=value` params."""
        for param in params:
            if '=' not in param:
                raise ValueError(f"param must look like key=value, got {param!r}")
            # split on the first '=' only; values may contain '='
            k, v = param.split("=", 1)
            boolean_value = self.str_to_bool(v)
            if boolean_value is None:
                try:
                    v = ast.literal_eval(v)
                    if isinstance(v, tuple):
                        v = list(v)
                except (ValueError, SyntaxError):
                    pass  # keep as string
            else:
                v = boolean_value

            k_split = k.split('.')
            current = self
            for part in k_split[:-1]:
                if part not in current or not isinstance(current[part], Dict):
                    current[part] = Dict()
                current = current[part]

            final_key = k_split[-1]
            if final_key in current:
                logger.info("overriding %s with %r", k, v)
            else:
                logger.warning("new param %s with %r", k, v)
            current[final_key] = self._hook(v)
