from __future__ import annotations

from dataclasses import asdict, dataclass, fields


@dataclass(frozen=True)
class Config:
    """Numerical tolerances and output settings.

    Most tolerances are relative factors; the scale they multiply is
    noted next to each field.
    """

    tol_eig: float = 1e-8     # x max(1, ||A||_F): eigenvalue clustering gap
    tol_proj: float = 1e-9    # x n: projector / identity checks
    tol_m: float = 1e-10      # absolute: zero C-multiplicity threshold
    tol_poly: float = 1e-8    # x max(1, p_k(mu_0)): orthogonality, reciprocity
    tol_coef: float = 1e-10   # absolute: leading-coefficient trimming
    tol_vec: float = 1e-8     # x ||target vector||: vector residuals
    tol_int: float = 1e-9     # x lambda_0: intersection-function spread
    tol_ex: float = 1e-8      # x rhs (excess), absolute (multiplicity slack)
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            if f.name.startswith("tol_") and not getattr(self, f.name) > 0:
                raise ValueError(f"{f.name} must be positive")
        if self.output_format not in ("json", "text"):
            raise ValueError("output_format must be 'json' or 'text'")

    def as_dict(self) -> dict:
        return asdict(self)
