"""Exact local data of parahoric group schemes and numerical invariants of
moduli of parahoric torsors."""
from .apartment import (
    AffineRoot,
    Alcove,
    AlcoveWalk,
    ApartmentPoint,
    Facet,
    alcove_walk,
    apply_word,
    enumerate_facets,
    eval_affine,
    facet_closure_leq,
    facet_of_point,
    fold_into_alcove,
    fundamental_alcove,
    make_facet,
    vanishing_set,
)
from .errors import (
    BruhatTitsError,
    DegenerateInputError,
    FacetIndexError,
    InadmissibleTypeError,
    InternalError,
    PreconditionError,
    ValidationError,
)
from .moduli import (
    CentralizerData,
    ModuliInput,
    RamificationDatum,
    TorsionElement,
    centralizer,
    e_G,
    fuchsian_check,
    hecke_fiber_dimension,
    moduli_dimension,
    rs_codim_bound,
    torsion_element,
    unstable_codim_bound,
)
from .parahoric import (
    ParabolicSet,
    ParahoricData,
    ReductiveQuotient,
    node_deletion_crosscheck,
    parabolic_set,
    parahoric_exponents,
    reductive_quotient,
    verify_floor_ceiling_lemma,
)
from .rootsys import (
    DynkinType,
    Root,
    RootSystem,
    SubSystem,
    build_root_system,
    cartan_pairing,
    classify_subsystem,
    reflect,
)

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "Alcove",
    "AlcoveWalk",
    "ApartmentPoint",
    "BruhatTitsError",
    "CentralizerData",
    "DegenerateInputError",
    "DynkinType",
    "Facet",
    "FacetIndexError",
    "InadmissibleTypeError",
    "InternalError",
    "ModuliInput",
    "ParabolicSet",
    "ParahoricData",
    "PreconditionError",
    "RamificationDatum",
    "ReductiveQuotient",
    "Root",
    "RootSystem",
    "SubSystem",
    "TorsionElement",
    "ValidationError",
    "alcove_walk",
    "apply_word",
    "build_root_system",
    "cartan_pairing",
    "centralizer",
    "classify_subsystem",
    "e_G",
    "enumerate_facets",
    "eval_affine",
    "facet_closure_leq",
    "facet_of_point",
    "fold_into_alcove",
    "fuchsian_check",
    "fundamental_alcove",
    "hecke_fiber_dimension",
    "make_facet",
    "moduli_dimension",
    "node_deletion_crosscheck",
    "parabolic_set",
    "parahoric_exponents",
    "reductive_quotient",
    "reflect",
    "rs_codim_bound",
    "torsion_element",
    "unstable_codim_bound",
    "vanishing_set",
    "verify_floor_ceiling_lemma",
]
