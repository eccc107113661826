"""Exact finite-category substrate."""

from .category import (
    FinCategory,
    FunctorMap,
    NatTransformation,
    check_category_laws,
    compose_functors,
    constant_functor,
    first_difference,
    hcomp,
    identity_functor,
    identity_nat,
    is_faithful,
    is_natural,
    label,
    validate_category,
    validate_functor,
    validate_nat_trans,
    vert,
    whisker,
)
from .karoubi import (
    IdempotentSplit,
    extend_functor,
    extend_monad,
    extend_nat_trans,
    is_idempotent_complete,
    karoubi_complete,
    split_idempotent,
    split_morphism,
)
from .search import (
    enumerate_functors,
    enumerate_nat_trans,
    find_isomorphism,
    inverse_functor,
    is_isomorphism,
)
from .structures import (
    AdjunctionData,
    ComonadData,
    EMResult,
    MonadData,
    algebras,
    coalgebras,
    comparison_functor,
    compose_adjunctions,
    em_category,
    identity_adjunction,
    identity_comonad,
    identity_monad,
    same_monad,
    validate_adjunction,
    validate_monad,
)
