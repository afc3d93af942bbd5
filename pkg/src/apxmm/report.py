"""Shared per-product report record."""

from __future__ import annotations

from dataclasses import dataclass, asdict


@dataclass
class ApproxReport:
    """What a single approximate product run measured and estimated.

    norm_da / norm_db are the Frobenius norms of the residues (the parts of A
    and B the truncated decomposition dropped). measured_error is filled only
    when the exact product was computed alongside. wall_time covers the
    decomposition plus the multiply, not input generation or checking.
    """

    method: str
    order: int
    k: int
    norm_da: float
    norm_db: float
    apriori_estimate: float | None = None
    posterior_estimate: float | None = None
    measured_error: float | None = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")
        for name in ("norm_da", "norm_db"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    def to_dict(self) -> dict:
        return asdict(self)
