"""Exact computation of rational homotopy invariants of formal maps.

Realizes finite-type graded-commutative cohomology algebras over the
rationals or a prime field, builds morphisms, tensor powers and kernel
ideals, and computes sectional-category-type invariants (LS-category, higher
topological complexity, homotopic distance) through ideal nilpotency, with
factored nonzero witnesses.
"""

from .errors import (
    CapExceededError,
    ConfigError,
    ParseError,
    RhiError,
    TruncationError,
    ValidationError,
)
from .fields import RATIONALS, FieldSpec, prime_field
from .gca import (
    AxiomCheck,
    Element,
    Generator,
    GradedAlgebra,
    MultiplicationTable,
    Presentation,
    base_field_algebra,
    check_axioms,
    koszul_sign,
    swap_sign,
    realize_presentation,
    realize_table,
)
from .morphisms import (
    AlgebraMap,
    GradedSubspace,
    augmentation,
    build_map,
    check_injective,
    check_surjective,
    compose,
    identity_map,
    image_subspace,
    kernel,
)
from .tensor import (
    TensorAlgebra,
    injection,
    multiplication_map,
    tensor_pair_map,
    tensor_power,
    tensor_power_map,
    tensor_product,
)
from .ideals import (
    Ideal,
    NilResult,
    ideal_from_generators,
    ideal_from_subspace,
    ideal_product,
    map_image_ideal,
    nilpotency,
    subspace_intersection,
)
from .invariants import (
    InvariantReport,
    cat_formal,
    hd_formal,
    relsecat_lower_bound,
    secat_formal,
    tc_mw_formal,
    tc_n_formal,
)
from .oracle import (
    RandomInstanceSpec,
    brute_nilpotency,
    random_algebra,
    random_ideal,
    random_map,
    random_quotient_map,
)
from .files import (
    algebra_from_dict,
    clear_cache,
    load_algebra,
    load_map,
    map_from_dict,
)

__version__ = "0.1.0"
