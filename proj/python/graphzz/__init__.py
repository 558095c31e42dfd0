"""Zigzag persistence barcodes of graph filtrations.

Thin wrapper over the C++ core: parse or generate a filtration, then ask for
its barcode in dimension 0, dimension 1, or codimension one through the dual
pipeline of an embedded 2-complex.
"""

try:
    from ._graphzz import (
        Filtration,
        InvariantError,
        ParseError,
        ValidationError,
        barcode0,
        barcode1,
        codim1,
        generate_planar,
        generate_random,
        oracle_barcode,
        parse_filtration,
    )
except ImportError:  # in-tree test layout: extension next to the build dir
    from _graphzz import (
        Filtration,
        InvariantError,
        ParseError,
        ValidationError,
        barcode0,
        barcode1,
        codim1,
        generate_planar,
        generate_random,
        oracle_barcode,
        parse_filtration,
    )

__all__ = [
    "Filtration",
    "ParseError",
    "ValidationError",
    "InvariantError",
    "parse_filtration",
    "generate_random",
    "generate_planar",
    "barcode0",
    "barcode1",
    "codim1",
    "oracle_barcode",
]
