"""Exact computations in U(sl(2,1) (x) A) and its signed symmetric tensor modules."""

from .algebra import CoeffAlgebra, PolyAlgebra, TableAlgebra, TruncAlgebra, parse_algebra
from .multiset import Multiset
from .pbw import UElem, format_uelem, normal_form
from .parser import parse_uelem
from .tensor_rep import Tensor, WeylIndex, act_elem, express_in_ts_basis, ts_basis, v_vector
from .weyl_ops import H, X1, X_tuple, Xm1, p, p1, q1

__all__ = [
    "CoeffAlgebra", "PolyAlgebra", "TableAlgebra", "TruncAlgebra", "parse_algebra",
    "Multiset", "UElem", "format_uelem", "normal_form", "parse_uelem",
    "Tensor", "WeylIndex", "act_elem", "express_in_ts_basis", "ts_basis", "v_vector",
    "H", "X1", "X_tuple", "Xm1", "p", "p1", "q1",
]
