"""Explicit charts, cohomology and ordered classification for low-dimensional
solvable groups."""

from .actions import (
    ExpAction,
    act,
    affine_on_semidirect,
    character,
    diagonal,
    infer_exponents,
    is_nontrivial,
    standardize_action,
    trivial,
)
from .classify import (
    CanonicalClass,
    Evidence,
    IsoWitness,
    NotSeparated,
    classify_group,
    classify_ordered,
    compose_witness,
    enumerate_canonical,
    function_witness,
    identity_witness,
    invert_witness,
    linear_witness,
    separating_invariant,
    verify_witness,
)
from .cohomology import (
    Cochain,
    CocycleLaw,
    GModule,
    coboundary,
    cocycle_residual,
    constant_cochain,
    extension_from_cocycle,
    g3_cocycle,
    g3_module,
    heis_cocycle,
    heis_module,
    normalize_cocycle,
    ordered_extension,
    verify_coboundary_witness,
)
from .errors import DomainError, InputError
from .groups import (
    Additive,
    Ec,
    GCd,
    GroupLaw,
    KCd,
    Product,
    SemidirectRR,
    SUT3,
    Tk,
    check_group_axioms,
    commutator,
    conjugate,
    g3,
    heis_to_sut3,
    heisenberg,
    invert,
    multiply,
    one_param_through,
    sut3_to_heis,
)
from .jsonio import dumps, law_from_descriptor, order_from_descriptor
from .orders import (
    Comparison,
    LexOrder,
    OrderedGroupSpec,
    check_conjugation_order_preserving,
    check_translation_invariance,
    compare,
    lex_less,
)
from .selftest import RunConfig, run_all
from .tolerance import SampleConfig, Tolerance

__version__ = "0.1.0"
