"""Generalized autocommuting probability of small finite groups, in exact arithmetic."""
from .autocommuting import (
    AutocommutingReport,
    absolute_center,
    analyze,
    autocommutator,
    autocommutator_set,
    autocommutator_subgroup,
    check_product_rule,
    distribution,
    pr_acentralizer_sum,
    pr_g_bruteforce,
    pr_g_orbit_formula,
    pr_trivial_stabilizer_formula,
)
from .automorphism import (
    Automorphism,
    AutomorphismGroup,
    OrbitPartition,
    acentralizer,
    aut_stabilizer,
    enumerate_automorphisms,
    inner_automorphisms,
    orbits,
    pointwise_stabilizer,
)
from .bounds import BoundEntry, BoundReport, bound_report, characterization_check
from .catalog import GroupSpec, build, parse_spec, standard_corpus
from .group import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    center,
    derived_subgroup,
    direct_product,
    is_isomorphic,
    make_group,
    quotient,
    subgroup_generated_by,
)
from .isoclinism import Autoisoclinism, autocommutator_map, find_autoisoclinism, verify_invariance

__version__ = "0.1.0"
