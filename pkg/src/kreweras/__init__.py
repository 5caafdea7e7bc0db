"""Kreweras complementation on noncrossing partitions and rerooting of plane trees."""

from .arith import catalan, chi_odd, euler_phi, moebius
from .counting import (
    CountReport,
    canonical_planar,
    count_asym_planar,
    count_asym_rooted_planar,
    count_planar,
    count_report,
    count_rooted_planar,
    phi_orbit,
    symmetry_order,
)
from .nc import (
    NoncrossingPartition,
    enumerate_nc,
    is_complement,
    is_noncrossing,
    kreweras,
    nc_join,
    nc_meet,
    parse_partition,
    rotate_nc,
)
from .orbits import OrbitTable, allowed_lengths, kappa_orbit, orbit_table, predicted_orbit_table
from .poly import IntPolynomial, mod_cyclic, parse_poly
from .sieve import CspReport, csp_verify, cyclotomic, fixed_point_count, q_binomial, q_catalan, q_factorial, q_integer
from .trees import (
    PlaneTree,
    edge_parity,
    enumerate_trees,
    from_dyck,
    from_edges,
    is_meander,
    phi,
    phi_inverse,
    rho,
    rho_bar,
    rho_inverse,
    star_bt,
    star_tp,
    to_dyck,
)

__version__ = "0.1.0"
