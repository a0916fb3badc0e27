"""Centralized numerical tolerances."""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances shared by all numerical routines.

    eps_eq: relative threshold for snapping near-equal momentum values to
        exact equality, and for clustering eigenvalues when computing
        commutants.
    eps_spec: allowed deviation between a constructed matrix spectrum and
        its prescribed target.
    eps_rank: relative singular-value cutoff for rank and nullspace
        decisions.
    eps_iso: bound on the normalized symplectic-pairing residual below
        which a tangent family counts as isotropic.
    """

    eps_eq: float = 1e-8
    eps_spec: float = 1e-10
    eps_rank: float = 1e-7
    eps_iso: float = 1e-8

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive")
        if self.eps_rank <= self.eps_spec:
            raise ValueError("eps_rank must exceed eps_spec")


DEFAULT_TOLERANCES = ToleranceConfig()
