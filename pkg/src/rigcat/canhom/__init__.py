from .descriptor import DescriptorError, hom_from_dict, hom_to_dict, load_hom
from .fcan import (
    check_generator_relations,
    fcan_generator,
    fcan_object,
    fcan_perm,
    fcan_preserves_structure,
    fcan_word,
)
from .hom import (
    EndpointMismatch,
    NonInvertibleData,
    RecurrenceMismatch,
    RigHom,
    TargetMismatch,
    basic_maps_from_data,
    build_hom,
    canonical_hom,
    closed_form_basic_maps,
    compose_homs,
    hom_data,
    monoidality_from_tau,
    random_hom,
    verify_hom_axioms,
)
from .transform import (
    RigTransformation,
    check_transformation,
    fcan_centralizer_sizes,
    find_endomorphisms,
    tau_transformation,
    unique_endomorphism_check,
    unique_iso,
    vertical,
)

__all__ = [
    "DescriptorError",
    "EndpointMismatch",
    "NonInvertibleData",
    "RecurrenceMismatch",
    "RigHom",
    "RigTransformation",
    "TargetMismatch",
    "basic_maps_from_data",
    "build_hom",
    "canonical_hom",
    "check_generator_relations",
    "check_transformation",
    "closed_form_basic_maps",
    "compose_homs",
    "fcan_centralizer_sizes",
    "fcan_generator",
    "fcan_object",
    "fcan_perm",
    "fcan_preserves_structure",
    "fcan_word",
    "find_endomorphisms",
    "hom_data",
    "hom_from_dict",
    "hom_to_dict",
    "load_hom",
    "monoidality_from_tau",
    "random_hom",
    "tau_transformation",
    "unique_endomorphism_check",
    "unique_iso",
    "verify_hom_axioms",
    "vertical",
]
