"""Exact computations with cobar constructions, Hochschild complexes and Cacti operations.

The main entry points:

* :mod:`cacti.catalog` builds standard bialgebras and algebras
  (Sweedler's algebra, Taft algebras, group algebras, truncated polynomials).
* :func:`cobar` and the operations in :mod:`cacti.cacti_ops` act on Omega(H).
* :func:`hochschild` and :mod:`cacti.hochschild` act on C*(A).
* :mod:`cacti.module_algebra` relates the two through module-algebra actions.
* :mod:`cacti.homology` computes Betti numbers and cohomology classes.
"""

__version__ = "0.1.0"

from .algebra import (AlgebraPresentation, AxiomReport, BialgebraPresentation, MorphismMatrix,  # noqa: E402
                      check_axioms, check_bialgebra_morphism, counit_kernel, dual_bialgebra)
from .cacti_ops import (brace, braces, check_all_identities, cup, extract_bialgebra,  # noqa: E402
                        gbracket, round_trip, star)
from .catalog import (catalog_algebras, catalog_bialgebras, example_from_id, group_algebra,  # noqa: E402
                      matrix_algebra, super_line, sweedler4, taft, trunc_poly)
from .cobar import CobarElement, cobar, differential, word  # noqa: E402
from .hochschild import (Cochain, SkewDerivationChain, hcup, hdifferential, hgbracket,  # noqa: E402
                         hochschild, skew_cocycle, well_graded_report)
from .homology import (CobarComplex, HochschildCochains, betti, class_bracket,  # noqa: E402
                       is_coboundary, representatives)
from .module_algebra import (ActionMap, check_module_algebra, induced, pairing_action,  # noqa: E402
                             verify_cacti_morphism)
from .scalar import GF, QQ, FieldSpec  # noqa: E402

__all__ = [
    "__version__", "FieldSpec", "QQ", "GF",
    "AlgebraPresentation", "BialgebraPresentation", "MorphismMatrix", "AxiomReport",
    "check_axioms", "check_bialgebra_morphism", "counit_kernel", "dual_bialgebra",
    "catalog_algebras", "catalog_bialgebras", "example_from_id", "group_algebra",
    "matrix_algebra", "super_line", "sweedler4", "taft", "trunc_poly",
    "CobarElement", "cobar", "differential", "word",
    "cup", "braces", "brace", "star", "gbracket", "check_all_identities", "extract_bialgebra",
    "round_trip", "Cochain", "hochschild", "hdifferential", "hcup", "hgbracket",
    "SkewDerivationChain", "skew_cocycle", "well_graded_report",
    "CobarComplex", "HochschildCochains", "betti", "representatives", "is_coboundary",
    "class_bracket", "ActionMap", "check_module_algebra", "induced", "pairing_action",
    "verify_cacti_morphism",
]
