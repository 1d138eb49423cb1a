"""Generalized approximation spaces over finite universes.

Neighborhood operators, rough approximations and topologies generated by
relation-induced subbases, plus a harness that checks the associated
propositions on every small relation.
"""

from .approximation import (
    ApproximationPair,
    ApproximationTable,
    approximation_table,
    lower_approx,
    upper_approx,
)
from .core import (
    BinaryRelation,
    ElementSet,
    RelationProfile,
    Universe,
    complement,
    make_relation,
    make_universe,
    relation_profile,
)
from .errors import *  # noqa: F401,F403
from .neighborhood import (
    KINDS,
    NeighborhoodKind,
    SetFamily,
    check_neighborhood_sandwich,
    neighborhood,
    neighborhood_family,
)
from .topology import (
    Topology,
    TopologyOrder,
    base_conditions,
    closure,
    compare_topologies,
    generate_topology,
    induced_topology,
    interior,
    is_base,
    is_cover,
    is_topology,
    claimed_subbase_condition,
    refines,
)

__version__ = "0.1.0"
