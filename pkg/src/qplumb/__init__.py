"""Exact and numeric quantum invariants of plumbed links at roots of unity."""

from .cyclotomic import (
    CycNumber,
    RootContext,
    brace,
    cyclotomic_poly,
    make_context,
    q_pow as q_pow_exact,
    qint,
    to_complex,
    zeta_pow,
)
from .errors import CapacityError, GraphFormatError, PoleError
from .invariants import (
    InvariantResult,
    TheoremReport,
    ado_invariant,
    ado_regularized,
    colored_jones,
    rn_hopf,
    rn_plumbed_numeric,
    rn_plumbed_recursive,
    rn_quotient_numeric,
    rn_regularized,
    rn_twist,
    rt_hopf,
    rt_plumbed,
    rt_plumbed_recursive,
    rt_twist,
    theorem_check,
    theorem_prefactor,
    theorem_rhs,
)
from .numeric import (
    NumericContext,
    brace_c,
    make_numeric_context,
    mod_dim,
    q_pow,
    qdim_typical_check,
)
from .plumbing import (
    ColorVector,
    PlumbedGraph,
    SignAssignment,
    apply_signs,
    enumerate_signs,
    load_graph,
    parse_graph,
    serialize_graph,
)
from .quantumrep import (
    ModuleAction,
    RelationReport,
    check_relations,
    qdim_simple,
    simple_module,
    verma_module,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ColorVector",
    "CycNumber",
    "GraphFormatError",
    "InvariantResult",
    "ModuleAction",
    "NumericContext",
    "PlumbedGraph",
    "PoleError",
    "RelationReport",
    "RootContext",
    "SignAssignment",
    "TheoremReport",
    "ado_invariant",
    "ado_regularized",
    "apply_signs",
    "brace",
    "brace_c",
    "check_relations",
    "colored_jones",
    "cyclotomic_poly",
    "enumerate_signs",
    "load_graph",
    "make_context",
    "make_numeric_context",
    "mod_dim",
    "parse_graph",
    "q_pow",
    "q_pow_exact",
    "qdim_simple",
    "qdim_typical_check",
    "qint",
    "rn_hopf",
    "rn_plumbed_numeric",
    "rn_plumbed_recursive",
    "rn_quotient_numeric",
    "rn_regularized",
    "rn_twist",
    "rt_hopf",
    "rt_plumbed",
    "rt_plumbed_recursive",
    "rt_twist",
    "serialize_graph",
    "simple_module",
    "theorem_check",
    "theorem_prefactor",
    "theorem_rhs",
    "to_complex",
    "verma_module",
    "zeta_pow",
]
