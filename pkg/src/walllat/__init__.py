"""walllat: exact-arithmetic checks of maximal-element counting bounds.

The package verifies, on concrete finite inputs, a family of lattice-counting
bounds: the classical maximal-subgroup bound and its relative (double-coset)
version, exact linear-independence certificates behind the relative bound,
coideal-lattice bounds for twisted crossed-product Kac algebras, fusion
subalgebra counts, and the direct-product bound.
"""

from walllat.config import Caps, default_caps
from walllat.errors import CapacityError, ParseError, SchemaError, ValidationError
from walllat.groups import (
    Group,
    GroupAction,
    Subgroup,
    conjugacy_classes,
    core_of,
    direct_product,
    double_coset_count,
    double_cosets,
    from_generators,
    interval_subgroups,
    is_solvable,
    maximal_overgroups,
    minimal_overgroups,
    normal_subgroups,
    semidirect_product,
    subgroup_closure,
)
from walllat.kac import (
    CocycleSystem,
    CoidealLattice,
    CoidealTriple,
    KacAlgebra,
    check_character_count_bound,
    check_kac_wall,
    check_relative_kac_wall,
    cocycle_set,
    enumerate_coideals,
    left_right_operators,
    second_commutant_dim,
    validate_cocycle_system,
    validate_triple_closure,
)
from walllat.fusion import (
    CharacterTable,
    FusionRing,
    from_character_table,
    from_group,
    maximal_fusion_subalgebras,
)
from walllat.wall import (
    Mod2Report,
    PermModule,
    TensorReport,
    WallReport,
    check_mod2,
    check_projector_identity,
    check_relative_wall,
    check_tensor_bound,
    check_wall,
    fixed_space_basis,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
