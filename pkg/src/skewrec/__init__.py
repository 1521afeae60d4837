"""skewrec: exact computation with skew group algebras and recollements.

Everything runs in exact arithmetic over the rationals or a prime field:
finite-dimensional algebras by structure constants or quivers, right
modules and their homology (radicals, syzygies, projective dimension,
Ext, Tor), finite group actions by automorphisms, skew group algebras,
and the battery of checkers that compare homological invariants before
and after passing to the skew group algebra.
"""

__version__ = "0.1.0"

from skewrec._kernel import backend_name
from skewrec.algebra import Algebra
from skewrec.action import GroupAction, new_group_action
from skewrec.linalg import Field, Matrix, Subspace
from skewrec.modules import (Bimodule, PdResult, RightModule, ext_dim,
                             global_dimension_upper, hom_space, is_projective,
                             projective_dimension, regular_module, syzygy,
                             top_module, tor_dim, twist_module)
from skewrec.quiver import QuiverPresentation, path_algebra
from skewrec.skew import (Linearization, SkewAlgebra, corner_compat_check,
                          equivariant_module, induce, lift_idempotent,
                          restrict, skew_group_algebra)

__all__ = [
    "__version__", "backend_name",
    "Field", "Matrix", "Subspace",
    "Algebra", "QuiverPresentation", "path_algebra",
    "RightModule", "Bimodule", "PdResult",
    "regular_module", "top_module", "twist_module", "hom_space", "syzygy",
    "is_projective", "projective_dimension", "global_dimension_upper",
    "ext_dim", "tor_dim",
    "GroupAction", "new_group_action",
    "SkewAlgebra", "skew_group_algebra", "lift_idempotent", "Linearization",
    "equivariant_module", "induce", "restrict", "corner_compat_check",
]
