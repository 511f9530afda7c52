"""Exact combinatorics of abelian Borel ideals and Dynkin diagram subsets."""

from .affine import (
    AffineRoot,
    AffineWeylElement,
    MinusculeRecord,
    affine_act,
    alpha_zero,
    compose,
    enumerate_Z1,
    enumerate_minuscule,
    identity_element,
    in_fundamental_domain,
    inverse,
    inversion_set,
    s_subset,
    simple_affine_reflection,
    z_of,
)
from .dynkin import (
    GradedPolynomial,
    Graph,
    check_extension_recurrence,
    check_series_recurrence,
    closed_form_polynomial,
    component_count,
    diagram_of,
    disjoint_union,
    evaluate,
    graph,
    path_graph,
    series_polynomial,
    subset_polynomial,
)
from .good_bijection import (
    Interval,
    phi_a,
    phi_a_inverse,
    phi_c,
    phi_c_inverse,
    unfold_c_root,
    validate_generator_chain,
)
from .ideals import (
    AbelianIdeal,
    enumerate_abelian_ideals,
    generators,
    ideal_from_roots,
    is_abelian_upper_ideal,
    kappa,
    roots_of,
    upper_closure,
    upper_covering_polynomial,
)
from .normalizer import levi_of_normalizer, psi_collisions
from .rootsys import (
    CorootVector,
    Root,
    RootSystem,
    TypeSpec,
    add_roots,
    build_root_system,
    coeff_string,
    coroot,
    inner,
    reflect,
    root_order_leq,
)

__version__ = "0.1.0"
