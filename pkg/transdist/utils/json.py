from fractions import Fraction
from typing import Any

import orjson

from transdist.utils.weight import weight_to_json


def _default(o: Any) -> Any:
    if isinstance(o, Fraction):
        return weight_to_json(o)
    if isinstance(o, frozenset | set):
        return sorted(o)
    raise TypeError(f"Object of type {o.__class__.__name__} is not JSON serializable")


class ORJSONEncoder:
    """
    ORJSON Encoder Class

    Fractions are written as integers when integral and as "p/q" strings otherwise, never as floats.
    """

    @staticmethod
    def encode(o, indent: bool = False) -> bytes:
        option = orjson.OPT_INDENT_2 if indent else 0
        return orjson.dumps(o, default=_default, option=option)

    @staticmethod
    def encode_str(o, indent: bool = False) -> str:
        return ORJSONEncoder.encode(o, indent).decode("utf-8")


class ORJSONDecoder:
    """
    ORJSON Decoder Class
    """

    @staticmethod
    def decode(s, *args):
        return orjson.loads(s)
