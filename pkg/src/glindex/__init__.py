"""Green-Lazarsfeld indices and Betti numbers of monomial ideals."""

from ._backend import BACKEND
from .betti import (
    INFINITY,
    BettiTable,
    UnsupportedInputError,
    beta_graded,
    beta_multi,
    betti_table,
    first_syzygy_betti,
    gl_index,
    has_linear_resolution,
    hochster_beta,
    hochster_table,
    is_linearly_presented,
)
from .clutter import (
    Clutter,
    FamilyMatcher,
    FreeResult,
    canonical_form,
    catalog,
    construct_Cd,
    family_C,
    find_induced_embedding,
    is_family_free,
)
from .complex import Q, SimplicialComplex, parse_field, reduced_homology
from .lattice import LcmLattice, build_lcm_lattice
from .linpres import (
    LinPresResult,
    generator_graph,
    linearly_presented_graph,
    pair_connected,
    power_check,
    split_divides,
)
from .monomial import Monomial, MonomialIdeal, power_generators
from .search import (
    UnsupportedRangeError,
    algorithm1,
    algorithm2,
    case_census_deg6,
    enumerate_omega,
    family_D,
    kappa,
)

__version__ = "0.1.0"
