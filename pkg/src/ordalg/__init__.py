"""Finite order-algebra workbench.

Builds finite posets and lattices, synthesizes sectional and relative
pseudocomplements, verifies residuation axioms and their consequences,
enumerates congruences, and lifts residuation to powerset operators.
Everything is exhaustively checked at desk scale; hot loops run on a
compiled kernel when available, with a pure-Python twin as fallback.
"""

from ._kernels import BACKEND, HAVE_C
from .binop import BinOp
from .congruence import (
    CARRIER_BUDGET,
    Congruence,
    FiniteAlgebra,
    all_congruences,
    check_congruence_distributive,
    check_permutable,
    check_weakly_regular,
    maltsev_replay,
    principal_congruence,
)
from .constructions import (
    CATALOG_KINDS,
    FIXTURE_NAMES,
    Catalog,
    Fixture,
    are_isomorphic,
    canonical_key,
    direct_product,
    enumerate_structures,
    fixture,
)
from .errors import (
    BudgetError,
    CycleDetectedError,
    DuplicateNameError,
    MissingConstantError,
    NoTopError,
    NotVerifiedError,
    OrdAlgError,
    ParseError,
    PartialStarError,
    PreconditionError,
    RaggedTableError,
    SizeBudgetError,
    SubsetBudgetError,
    UnknownElementError,
    UnknownFixtureError,
    UnknownNameError,
)
from .fileformat import StructureFile, from_poset, parse, render
from .operators import (
    CanonicalProduct,
    CanonicalResidual,
    ExplicitProduct,
    ExplicitResidual,
    OperatorPoset,
    adjointness_solutions,
    canonical_operators,
    check_operator_axioms,
    generated_family,
    operator_derived_laws,
)
from .poset import (
    MAX_ELEMENTS,
    LatticeOps,
    NotALattice,
    Poset,
    as_lattice,
    bounds,
    lower_set,
    make_poset,
    upper_set,
)
from .pseudocomplement import (
    ClassificationReport,
    FailureWitness,
    classify,
    is_meet_semidistributive,
    relative_pc,
    relative_pc_poset,
    relative_table_poset,
    sectional_pc_lattice,
    sectional_pc_poset,
    star_table_poset,
    synthesize_sectional,
)
from .residuation import (
    AxiomReport,
    IdentityBasisReport,
    ResiduationCandidate,
    check_divisibility,
    check_residuation,
    derived_laws,
    from_sectional,
    half_adjointness,
    identity_basis_check,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_C",
    "MAX_ELEMENTS",
    "CARRIER_BUDGET",
    "CATALOG_KINDS",
    "FIXTURE_NAMES",
    "Poset",
    "LatticeOps",
    "NotALattice",
    "BinOp",
    "Verdict",
    "Fixture",
    "Catalog",
    "StructureFile",
    "FiniteAlgebra",
    "Congruence",
    "OperatorPoset",
    "CanonicalProduct",
    "CanonicalResidual",
    "ExplicitProduct",
    "ExplicitResidual",
    "AxiomReport",
    "IdentityBasisReport",
    "ResiduationCandidate",
    "ClassificationReport",
    "FailureWitness",
    "make_poset",
    "as_lattice",
    "bounds",
    "upper_set",
    "lower_set",
    "sectional_pc_lattice",
    "sectional_pc_poset",
    "relative_pc",
    "relative_pc_poset",
    "star_table_poset",
    "relative_table_poset",
    "synthesize_sectional",
    "is_meet_semidistributive",
    "classify",
    "check_residuation",
    "check_divisibility",
    "from_sectional",
    "derived_laws",
    "half_adjointness",
    "identity_basis_check",
    "canonical_operators",
    "generated_family",
    "check_operator_axioms",
    "operator_derived_laws",
    "adjointness_solutions",
    "principal_congruence",
    "all_congruences",
    "check_permutable",
    "check_congruence_distributive",
    "check_weakly_regular",
    "maltsev_replay",
    "fixture",
    "direct_product",
    "enumerate_structures",
    "canonical_key",
    "are_isomorphic",
    "parse",
    "render",
    "from_poset",
    "OrdAlgError",
    "DuplicateNameError",
    "UnknownNameError",
    "CycleDetectedError",
    "NoTopError",
    "PartialStarError",
    "BudgetError",
    "SizeBudgetError",
    "SubsetBudgetError",
    "MissingConstantError",
    "NotVerifiedError",
    "PreconditionError",
    "UnknownFixtureError",
    "ParseError",
    "UnknownElementError",
    "RaggedTableError",
]
