"""Exact generalized inverses over Q(i), centered on the m-weak group inverse."""

__version__ = "0.1.0"

from .scalar import GaussianRational, DivisionByZero  # noqa: E402
from .matrix import Matrix, DimensionError, RankProfile  # noqa: E402
from .engine import (  # noqa: E402
    Path,
    NotGroupInvertible,
    EngineInconsistency,
    HypothesisViolated,
    mat_index,
    moore_penrose,
    drazin,
    drazin_data,
    group_inverse,
    core_ep,
    weak_group,
    m_weak_group,
    m_weak_group_all_paths,
    gg_inverse,
    mwg_decompose,
    core_nilpotent,
    drazin_from_parts,
    pierce_blocks,
    mwg_from_blocks,
    polar_idempotent,
    recover_from_relaxed,
)
