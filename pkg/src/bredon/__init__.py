"""Exact Z/2 Bredon cohomology for the Klein four group C2 x Sigma2.

Dimensions and bases of H^V(pt) in every RO(C2 x Sigma2)-degree, the
auxiliary spaces B_{Sigma2}C2, E_{Sigma2}C2 and its cofiber, and the Bredon
motivic cohomology of R with its Betti realization map.
"""

__version__ = "0.1.0"

from .degrees import KleinDegree, MotivicBidegree, Region, realize, region_of
from .f2algebra import (
    Element,
    IllFormed,
    Monomial,
    UnknownProduct,
    multiply,
    normal_form,
    parse_element,
    restrict,
    stong_dim,
    stong_mul,
    transfer,
)
from .klein_point import GroupDescriptor, group_at
from .motivic import (
    MotivicGroup,
    Status,
    borel_group,
    decomposition_R,
    motivic_group_R,
    nc_module_action,
    realization_status,
)
from .series import LaurentPoly, dim_point, series_for, series_oracle
from .spaces import (
    b_space_dim,
    bc2_motivic_dim,
    e_space_group,
    etilde_space_group,
    realize_class,
    w_q_dim,
)

__all__ = [
    "KleinDegree", "MotivicBidegree", "Region", "realize", "region_of",
    "Element", "IllFormed", "Monomial", "UnknownProduct", "multiply", "normal_form",
    "parse_element", "restrict", "stong_dim", "stong_mul", "transfer",
    "GroupDescriptor", "group_at",
    "MotivicGroup", "Status", "borel_group", "decomposition_R", "motivic_group_R",
    "nc_module_action", "realization_status",
    "LaurentPoly", "dim_point", "series_for", "series_oracle",
    "b_space_dim", "bc2_motivic_dim", "e_space_group", "etilde_space_group",
    "realize_class", "w_q_dim",
]
