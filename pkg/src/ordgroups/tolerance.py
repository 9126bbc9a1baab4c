"""Tolerance policy and seeded sampling shared by all checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class Tolerance:
    """Mixed absolute/relative comparison: |u-v| <= abs + rel*max(|u|,|v|)."""

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InputError("tolerances must be strictly positive")

    def bound(self, scale: float = 0.0) -> float:
        return self.abs_tol + self.rel_tol * abs(scale)

    def close(self, u, v) -> bool:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        gap = np.abs(u - v)
        cap = self.abs_tol + self.rel_tol * np.maximum(np.abs(u), np.abs(v))
        return bool(np.all(gap <= cap))


@dataclass(frozen=True)
class SampleConfig:
    """Deterministic sampling: coordinates uniform on [-box, box]."""

    seed: int = 0
    count: int = 1000
    box: float = 3.0

    def __post_init__(self):
        if self.count < 1:
            raise InputError("sample count must be >= 1")
        if self.seed < 0:
            raise InputError("seed must be an unsigned integer")
        if not (self.box > 0 and np.isfinite(self.box)):
            raise InputError("box must be positive and finite")

    def rng(self, stream: int = 0) -> np.random.Generator:
        # stream isolates independent draws under one seed
        return np.random.default_rng((self.seed, stream))

    def sample(self, dim: int, stream: int = 0, count: int | None = None) -> np.ndarray:
        n = self.count if count is None else count
        return self.rng(stream).uniform(-self.box, self.box, size=(n, dim))


DEFAULT_TOL = Tolerance()
