"""
Value objects shared across antiplex.

User-facing, validated objects are pydantic models; the result type is a
frozen dataclass because it is created in the search hot path and must be
hashable and orderable.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.antiplex.core.exceptions import GeneratorError, ParameterError

PHASES = frozenset({"load", "vr", "dr", "enumerate", "total"})


class Side(str, Enum):
    """Side of an antagonistic k-plex."""
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class Algorithm(str, Enum):
    """Enumeration engines exposed on the command line."""
    BAPE = "bape"
    SANC = "sanc"
    SAPE = "sape"


class OutputMode(str, Enum):
    """How results are delivered."""
    LIST = "list"
    COUNT = "count"
    STREAM = "stream"


def _first_error(e: ValidationError) -> str:
    errors = e.errors()
    if not errors:
        return str(e)
    err = errors[0]
    loc = ".".join(str(part) for part in err.get("loc", ()))
    msg = err.get("msg", "invalid value")
    return f"{loc}: {msg}" if loc else msg


class Params(BaseModel):
    """The pair (k, t) with t >= 2k - 1."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Plex slack: every member may miss at most k - 1 others")
    t: int = Field(..., description="Minimum size of each side")

    @model_validator(mode="after")
    def _check_t(self) -> "Params":
        if self.t < 2 * self.k - 1:
            raise ValueError(f"t must be at least 2k-1={2 * self.k - 1}, got t={self.t}")
        return self

    @classmethod
    def of(cls, k: int, t: int) -> "Params":
        """Build validated parameters, raising ParameterError instead of ValidationError."""
        try:
            return cls(k=k, t=t)
        except ValidationError as e:
            raise ParameterError(f"invalid parameters (k={k}, t={t}): {_first_error(e)}") from e


@dataclass(frozen=True, order=True)
class AntagonisticPlex:
    """Canonical result: the side holding the smallest vertex id is ``left``."""
    left: Tuple[int, ...]
    right: Tuple[int, ...]

    @classmethod
    def canonical(cls, a: Iterable[int], b: Iterable[int]) -> "AntagonisticPlex":
        side_a = tuple(sorted(a))
        side_b = tuple(sorted(b))
        if not side_a or (side_b and side_b[0] < side_a[0]):
            side_a, side_b = side_b, side_a
        return cls(left=side_a, right=side_b)

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.left) | frozenset(self.right)

    def __len__(self) -> int:
        return len(self.left) + len(self.right)


class LoadReport(BaseModel):
    """What the edge-list loader read, collapsed and dropped."""
    lines: int = 0
    comments: int = 0
    edges_read: int = 0
    duplicates: int = 0
    conflicts: int = 0
    self_loops: int = 0


class ReductionReport(BaseModel):
    """Outcome of vertex reduction plus per-seed dichromatic candidate counts."""
    n: int
    removed_vr: int
    survivors: FrozenSet[int]
    per_seed_candidates: Dict[int, int] = Field(default_factory=dict)
    edge_visits: int = 0

    @model_validator(mode="after")
    def _check_accounting(self) -> "ReductionReport":
        if self.removed_vr + len(self.survivors) != self.n:
            raise ValueError("removed_vr + |survivors| must equal n")
        return self

    @property
    def dr_candidate_total(self) -> int:
        return sum(self.per_seed_candidates.values())


class GenSpec(BaseModel):
    """Parameters of the planted antagonistic community generator."""
    n: int = Field(..., ge=0)
    planted: int = Field(0, ge=0, description="Number of planted community pairs")
    side: int = Field(0, ge=0, description="Vertices on each side of a planted community")
    p_pos_in: float = Field(1.0, ge=0.0, le=1.0)
    p_neg_cross: float = Field(1.0, ge=0.0, le=1.0)
    p_noise: float = Field(0.0, ge=0.0, le=1.0)
    seed: int = 0

    @model_validator(mode="after")
    def _check_room(self) -> "GenSpec":
        if self.planted and self.side < 1:
            raise ValueError("side must be at least 1 when communities are planted")
        if self.planted * 2 * self.side > self.n:
            raise ValueError(
                f"{self.planted} communities of 2x{self.side} vertices do not fit in n={self.n}"
            )
        return self

    @classmethod
    def build(cls, **kwargs) -> "GenSpec":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise GeneratorError(f"invalid generator spec: {_first_error(e)}") from e


class RunStats(BaseModel):
    """Statistics of one enumeration run, written to standard error as JSON."""
    algo: Algorithm
    k: int
    t: int
    n: int
    m_pos: int
    m_neg: int
    vr_removed: int = 0
    dr_candidate_total: int = 0
    seeds: int = 0
    results: int = 0
    phase_times: Dict[str, float] = Field(default_factory=dict)
    peak_memory: Optional[int] = None

    @model_validator(mode="after")
    def _check_phases(self) -> "RunStats":
        unknown = set(self.phase_times) - PHASES
        if unknown:
            raise ValueError(f"unknown phases: {sorted(unknown)}")
        return self

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)
