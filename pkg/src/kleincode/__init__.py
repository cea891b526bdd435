"""Linear codes over the Kleinian four-group K = Z2 x Z2."""

from kleincode.kcore import (
    KCode,
    KWord,
    delta,
    delta_plus,
    direct_sum,
    dual,
    epsilon2,
    even_subcode,
    gamma1,
    hamming,
    extended_hamming,
    hexacode,
    inner,
    min_weight,
    odd_hexacode,
    parse_code,
    emit_code,
    shorter_hexacode,
    span,
    standard_code,
)

__all__ = [
    "KCode",
    "KWord",
    "delta",
    "delta_plus",
    "direct_sum",
    "dual",
    "epsilon2",
    "even_subcode",
    "gamma1",
    "hamming",
    "extended_hamming",
    "hexacode",
    "inner",
    "min_weight",
    "odd_hexacode",
    "parse_code",
    "emit_code",
    "shorter_hexacode",
    "span",
    "standard_code",
]

__version__ = "0.1.0"
