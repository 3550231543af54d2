"""Size caps guarding the exponential searches.

Defaults can be overridden with the ``HOMHOM_SIZE_CAP`` environment variable,
either as a single integer (replaces the general cap) or as a comma separated
list such as ``general=30,canonical=11,power=10000,enumeration=7``.
"""

import os
from dataclasses import dataclass, replace

from .errors import SizeCapExceeded

ENV_VAR = "HOMHOM_SIZE_CAP"


@dataclass(frozen=True)
class SizeCaps:
    general: int = 24
    canonical: int = 10
    power: int = 4096
    enumeration: int = 7


DEFAULT_CAPS = SizeCaps()


def parse_caps(text, base=DEFAULT_CAPS):
    text = text.strip()
    if not text:
        return base
    if text.isdigit():
        return replace(base, general=int(text))
    fields = {}
    for item in text.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in SizeCaps.__dataclass_fields__ or not value.strip().isdigit():
            raise ValueError(f"bad {ENV_VAR} entry: {item!r}")
        fields[key] = int(value)
    return replace(base, **fields)


def current_caps():
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_CAPS
    return parse_caps(raw)


def check(what, size, cap):
    if size > cap:
        raise SizeCapExceeded(what, size, cap)
