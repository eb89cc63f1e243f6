"""Root-system combinatorics behind pavings of Peterson and regular nilpotent Hessenberg varieties."""
from .billey_kumar import (RootPolynomial, billey, billey_naive, blocks, classically_embeddable,
                           coefficient, kumar_rhs, kumar_smooth, peterson_smooth)
from .chevalley import ChevalleyTable, structure_constants
from .hessenberg import HessenbergSpace, betti_numbers, cell_dimension, cell_nonempty
from .rootsys import LieType, RootSystem, root_system
from .weyl import WeylElement, bruhat_leq, from_word, longest_element

__version__ = "0.1.0"

__all__ = [
    "ChevalleyTable", "HessenbergSpace", "LieType", "RootPolynomial", "RootSystem", "WeylElement",
    "betti_numbers", "billey", "billey_naive", "blocks", "bruhat_leq", "cell_dimension",
    "cell_nonempty", "classically_embeddable", "coefficient", "from_word", "kumar_rhs",
    "kumar_smooth", "longest_element", "peterson_smooth", "root_system", "structure_constants",
]
