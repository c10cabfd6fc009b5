"""Split square matrices over GF(2^m) into a square-zero part and a
diagonalizable (or potent) part, with independently checkable certificates."""

from .canonical import charpoly, companion_of, minpoly, rcf
from .certificate import SplitCertificate
from .field import FieldSpec, make_field, parse_field
from .matrix import Mat, format_matrix, parse_matrix
from .poly import Poly
from .splitter import SplitError, SplitOptions, split_any, split_block, split_f2, split_subfield
from .verify import CheckReport, brute_force_exists, check_certificate

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "FieldSpec",
    "Mat",
    "Poly",
    "SplitCertificate",
    "SplitError",
    "SplitOptions",
    "brute_force_exists",
    "charpoly",
    "check_certificate",
    "companion_of",
    "format_matrix",
    "make_field",
    "minpoly",
    "parse_field",
    "parse_matrix",
    "rcf",
    "split_any",
    "split_block",
    "split_f2",
    "split_subfield",
]
