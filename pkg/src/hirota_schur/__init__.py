"""Exact Schur function identities: Jacobi-Trudi determinants, Plücker relations,
multi-time Hirota identities and Littlewood-Richardson products."""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402
    CornerCoords,
    IntervalChain,
    InvalidCorners,
    NoSuchColumn,
    Partition,
    add_column,
    enumerate_chains,
    nested_chains,
    partitions_of,
    partitions_up_to,
    pull,
    push,
    remove_column,
    to_corners,
)
from .symfunc import InexactDivision, Mode, Polynomial, Symbol, SymMatrix, determinant  # noqa: E402
from .jt_box import BoxMatrix, Flavor, JTSpec, box, hirota_box, jt_matrix, schur, schur_expand  # noqa: E402
from .plucker import PluckerRelation, box_relation, generate, verify  # noqa: E402
from .hirota import (  # noqa: E402
    DualJacobiTrudiSeeds,
    Evolver,
    HirotaIdentity,
    evolve,
    main_identity,
    q_system,
    quantum_identity,
    verify_identity,
)
from .lr import Tableau, act, check_rectangle, conjecture_check, enumerate_ssyt, lr_multiply, rectangle_bijection  # noqa: E402
