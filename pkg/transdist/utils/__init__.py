from .json import ORJSONDecoder, ORJSONEncoder
from .weight import Weight, as_weight, format_weight, weight_to_json

__all__ = [
    "ORJSONDecoder",
    "ORJSONEncoder",
    "Weight",
    "as_weight",
    "format_weight",
    "weight_to_json",
]
