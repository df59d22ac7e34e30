from .fields import QQ, FieldElement, NumberField, fe_arith, fe_sign, field_from_poly, find_embedding
from .intmat import IntMatrix, hermite_normal_form, lattice_basis, smith_normal_form
from .perron import charpoly, check_primitive, perron_data

__all__ = [
    "QQ",
    "FieldElement",
    "NumberField",
    "IntMatrix",
    "charpoly",
    "check_primitive",
    "fe_arith",
    "fe_sign",
    "field_from_poly",
    "find_embedding",
    "hermite_normal_form",
    "lattice_basis",
    "perron_data",
    "smith_normal_form",
]
