"""Order ideals and border bases of lattice ideals over Z^n."""

from .border_basis import (
    BinomialFamily,
    RealizabilityResult,
    border,
    border_families,
    expand_binomials,
    groebner_realizable,
)
from .compatibility import (
    AffineFamily,
    AffineMap,
    ContractViolationError,
    UnsupportedGeometryError,
    is_max_compatible,
    representative_in,
    rho_image,
)
from .dim2 import CornerData, Dim2Ideal, TwoHNF, compute_B2, consecutive_pairs, ideals_2d, second_hnf
from .lattice_core import (
    Lattice,
    LatticeInputError,
    RankError,
    SignDecomp,
    decompose,
    hnf,
    hnf_coefficients,
    label,
    lattice_from_json,
    lattice_to_json,
    member,
    rho,
)
from .lattice_minimals import (
    compute_A1,
    compute_X1,
    graver_basis,
    hilbert_basis_orthant,
    sq_leq,
)
from .region_graph import (
    QuotientGraph,
    Region,
    adjacent,
    compute_regions,
    maximal_cliques,
    maximal_order_ideals,
    order_ideals_from_cliques,
    quotient_graph,
    signature,
    signature_basis,
)
from .staircase import (
    INF,
    HyperRect,
    RectUnion,
    complement_of_cones,
    downset,
    is_antichain,
    is_order_ideal,
    lcm,
    leq,
    minimal_elements,
    rect_union_from_json,
    rect_union_to_json,
    upset,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
