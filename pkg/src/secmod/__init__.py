"""Finite Z/nZ-modules, their submodule lattices, and 2-absorbing secondary submodules."""
from .classify import (
    CLASSES,
    ClassificationReport,
    classify_all,
    is_2_absorbing_primary_submodule,
    is_2_absorbing_second,
    is_2_absorbing_secondary,
    is_2_absorbing_submodule,
    is_cocyclic,
    is_comultiplication,
    is_second_radical_submodule,
    is_secondary,
    is_strongly_2_absorbing_second,
    is_strongly_2_absorbing_secondary,
    secondary_representation,
)
from .errors import (
    BoundExceededError,
    IllDefinedHomError,
    NotProperError,
    ParentMismatchError,
    ParseError,
    RingMismatchError,
    SecmodError,
)
from .harness import (
    THEOREM_IDS,
    CorpusSpec,
    TheoremReport,
    check_all,
    check_theorem,
    corpus_generate,
    product_decompose,
    search_counterexample,
)
from .ideals import (
    Ideal,
    RingSpec,
    is_2_absorbing_ideal,
    is_2_absorbing_primary_ideal,
    is_primary_ideal,
    is_prime_ideal,
)
from .lattice import (
    SubLattice,
    completely_irreducibles,
    enumerate_submodules,
    is_prime_submodule,
    is_second,
    m_radical,
    prime_submodules,
    second_radical,
)
from .modules import (
    FinModule,
    ModuleHom,
    Submodule,
    annihilator,
    as_module,
    colon,
    coproduct,
    hom_image,
    hom_make,
    hom_preimage,
    intersect,
    make_module,
    quotient,
    scalar_image,
    span,
    submodule_sum,
)
