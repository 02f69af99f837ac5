"""Internal groupoids over finite base instances.

The package is organized in layers: ``base`` holds the three finite base
instances (sets, pointed sets, abelian groups) with their objects, maps,
and limits; ``groupoid`` builds internal groupoids, functors, and cells
on top; ``holim`` adds the homotopy-limit constructions and comparison
functors; ``classify`` decides fibration and equivalence properties;
``arrow`` carries the square-level analogues plus normalization; and
``harness`` supplies seeded generators with the registered property
suites.  ``cli`` exposes all of it as the ``groupoid-lab`` command.
"""

from .base import (
    FINAB,
    FINPTDSET,
    FINSET,
    BaseMorphism,
    BaseObject,
    CapabilityError,
    CompositionError,
    DiagramError,
    GroupoidLabError,
    NoMediatorError,
    classify_morphism,
    compose,
    direct_sum,
    finab_object,
    finptdset_object,
    finset_object,
    identity,
    kernel,
    parse_instance,
    product,
    pullback,
    zmod,
)
from .groupoid import (
    InternalFunctor,
    InternalGroupoid,
    NatTransformation,
    action_groupoid,
    compose_functors,
    delooping,
    discrete_groupoid,
    functor,
    groupoid_from_arrow,
    identity_functor,
    indiscrete_groupoid,
    make_groupoid,
    pi0,
    pi1,
    product_groupoid,
    transformation,
    validate_functor,
    validate_groupoid,
    validate_transformation,
)
from .holim import (
    arrow_groupoid,
    comparison_J_data,
    comparison_T,
    pullback_groupoid,
    strong_h_kernel,
    strong_h_pullback,
)
from .classify import (
    classification_report,
    classify_fibration,
    classify_star_fibration,
    is_equivalence,
    is_fully_faithful,
    is_weak_equivalence,
)
from .arrow import (
    ArrowMorphism,
    ArrowObject,
    classify_arrow_morphism,
    comparison_J_arr,
    normalize,
    normalize_obj,
    strong_h_kernel_arr,
)
from .harness import (
    SuiteReport,
    gen_fibration,
    gen_functor,
    gen_groupoid,
    gen_transformation,
    run_suite,
    suite_names,
)
from .serialize import from_json, to_json, value_from_data, value_to_data

__version__ = "0.1.0"

__all__ = [
    "FINAB",
    "FINPTDSET",
    "FINSET",
    "ArrowMorphism",
    "ArrowObject",
    "BaseMorphism",
    "BaseObject",
    "CapabilityError",
    "CompositionError",
    "DiagramError",
    "GroupoidLabError",
    "InternalFunctor",
    "InternalGroupoid",
    "NatTransformation",
    "NoMediatorError",
    "SuiteReport",
    "action_groupoid",
    "arrow_groupoid",
    "classification_report",
    "classify_arrow_morphism",
    "classify_fibration",
    "classify_morphism",
    "classify_star_fibration",
    "comparison_J_arr",
    "comparison_J_data",
    "comparison_T",
    "compose",
    "compose_functors",
    "delooping",
    "direct_sum",
    "discrete_groupoid",
    "finab_object",
    "finptdset_object",
    "finset_object",
    "from_json",
    "functor",
    "gen_fibration",
    "gen_functor",
    "gen_groupoid",
    "gen_transformation",
    "groupoid_from_arrow",
    "identity",
    "identity_functor",
    "indiscrete_groupoid",
    "is_equivalence",
    "is_fully_faithful",
    "is_weak_equivalence",
    "kernel",
    "make_groupoid",
    "normalize",
    "normalize_obj",
    "parse_instance",
    "pi0",
    "pi1",
    "product",
    "product_groupoid",
    "pullback",
    "pullback_groupoid",
    "run_suite",
    "strong_h_kernel",
    "strong_h_kernel_arr",
    "strong_h_pullback",
    "suite_names",
    "to_json",
    "transformation",
    "validate_functor",
    "validate_groupoid",
    "validate_transformation",
    "value_from_data",
    "value_to_data",
    "zmod",
]
