"""Burnside ring computations for small finite groups.

Builds a concrete finite group, its subgroup-class table and table of
marks, the ring multiplication tensor, the complex and real character data,
the basic degrees of the real irreducibles, and finally the full unit group
with an explicit factorization of every unit into basic degrees.
"""

__version__ = "0.1.0"

from .characters import (
    CharacterTable,
    FixedDimMatrix,
    RealIrrep,
    RealIrrepSet,
    character_table,
    element_classes,
    fixed_dim,
    fixed_dim_matrix,
    frobenius_schur,
    perm_character_decomposition,
    real_irreducibles,
)
from .degrees import (
    BasicDegree,
    SpectralInput,
    all_basic_degrees,
    basic_degree,
    count_negative_eigenvalues,
    degree_of_linear_iso,
    degree_product,
    ghost_degree_linear,
    negative_eigen_multiplicities,
)
from .errors import (
    BurnsideError,
    CapExceeded,
    GroupMismatch,
    GroupTooLarge,
    InexactDivision,
    MalformedCycle,
    NoSolution,
    NotASubgroup,
    NotAUnit,
    NotIntegral,
    SingularBlock,
    UnknownSpec,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    SubgroupClassTable,
    catalog_group,
    group_from_generators,
    subgroup_classes,
)
from .gsets import (
    GSet,
    burnside_linearization,
    coset_space,
    fixed_points,
    isotropy,
    isotropy_census,
    orbits,
    product,
    regular_gset,
)
from .marks import MarksMatrix, mark, table_of_marks
from .pipeline import Pipeline
from .ring import (
    BurnsideElement,
    GhostVector,
    MultTensor,
    basis_element,
    enumerate_units,
    ghost_map,
    ghost_preimage,
    identity_element,
    is_unit,
    multiply,
    mult_tensor,
)
from .units import (
    Factorization,
    ParityVector,
    UnitRecord,
    VerificationReport,
    factor_unit,
    gf2_rank,
    parity_vector,
    solve_parity,
    verify_generation,
)
