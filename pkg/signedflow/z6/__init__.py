from .isomorphism import Z2Z3_TO_Z6, Z6_TO_Z2Z3, z2z3_to_z6, z6_to_z2z3
from .search import find_z2z3_flow
from .normalize import (
    SourceParity,
    NormalizedValuation,
    normalize_cubic,
    source_parity,
    odd_negative_count,
    role_violation,
)
