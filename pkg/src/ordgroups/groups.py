"""Closed-form group laws on coordinate charts of dimension 1 to 3.

Every law acts on flat coordinate vectors; the chart conventions are:

  Additive(n)        (x...)        coordinatewise addition
  SemidirectRR(c)    (x, y)        x normal, y acting:  (x1 + e^{c y1} x2, y1 + y2)
  Ec(c)              (x, y, z)     z central:  z1 + z2 + c (x1 y2 - y1 x2)
  SUT3               (x, y, z)     unitriangular 3x3 chart:  z1 + z2 + x1 y2
  GCd(c, d)          (x, y, z)     z1 + e^{c x1 + d y1} z2
  KCd(c, d)          (x, y, z)     x acting:  (y1 + e^{c x1} y2, z1 + e^{d x1} z2)
  Tk(k)              (x, y, z)     x1 + x2 e^{z1} + k y2 z1 e^{z1}, y1 + y2 e^{z1}, z1 + z2
  Product(a, b)      concatenated charts

All operations broadcast over stacked inputs of shape (..., dim).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .tolerance import SampleConfig, Tolerance, DEFAULT_TOL


def as_coords(x, dim: int | None = None) -> np.ndarray:
    """Validate a single element: finite 1-d float vector of the given length."""
    a = np.asarray(x, dtype=float)
    if a.ndim != 1:
        raise InputError(f"element must be a flat coordinate vector, got shape {a.shape}")
    if dim is not None and a.shape[0] != dim:
        raise InputError(f"element has {a.shape[0]} coordinates, law expects {dim}")
    if not np.all(np.isfinite(a)):
        raise InputError("element coordinates must be finite")
    return a


class GroupLaw:
    """Base for all chart group laws. Subclasses are immutable."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def identity(self) -> np.ndarray:
        return np.zeros(self.dim)

    def descriptor(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Additive(GroupLaw):
    n: int = 1

    def __post_init__(self):
        if self.n not in (1, 2, 3):
            raise InputError("additive charts cover dimensions 1 to 3")

    @property
    def dim(self):
        return self.n

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def descriptor(self):
        return {"family": "additive", "params": {"n": self.n}, "dim": self.n}


@dataclass(frozen=True)
class SemidirectRR(GroupLaw):
    c: float = 1.0

    @property
    def dim(self):
        return 2

    def mul(self, a, b):
        x1, y1 = a[..., 0], a[..., 1]
        x2, y2 = b[..., 0], b[..., 1]
        return np.stack([x1 + np.exp(self.c * y1) * x2, y1 + y2], axis=-1)

    def inv(self, a):
        x, y = a[..., 0], a[..., 1]
        return np.stack([-np.exp(-self.c * y) * x, -y], axis=-1)

    def descriptor(self):
        return {"family": "semidirect_rr", "params": {"c": self.c}, "dim": 2}


@dataclass(frozen=True)
class Ec(GroupLaw):
    c: float

    @property
    def dim(self):
        return 3

    def mul(self, a, b):
        x1, y1, z1 = a[..., 0], a[..., 1], a[..., 2]
        x2, y2, z2 = b[..., 0], b[..., 1], b[..., 2]
        return np.stack(
            [x1 + x2, y1 + y2, z1 + z2 + self.c * (x1 * y2 - y1 * x2)], axis=-1
        )

    def inv(self, a):
        # the central correction vanishes: det of (v, -v) rows is 0
        return -a

    def descriptor(self):
        return {"family": "e_c", "params": {"c": self.c}, "dim": 3}


def heisenberg() -> Ec:
    """The Heisenberg chart: Ec with the half-determinant cocycle."""
    return Ec(0.5)


@dataclass(frozen=True)
class SUT3(GroupLaw):
    @property
    def dim(self):
        return 3

    def mul(self, a, b):
        x1, y1, z1 = a[..., 0], a[..., 1], a[..., 2]
        x2, y2, z2 = b[..., 0], b[..., 1], b[..., 2]
        return np.stack([x1 + x2, y1 + y2, z1 + z2 + x1 * y2], axis=-1)

    def inv(self, a):
        x, y, z = a[..., 0], a[..., 1], a[..., 2]
        return np.stack([-x, -y, x * y - z], axis=-1)

    def descriptor(self):
        return {"family": "sut3", "params": {}, "dim": 3}


@dataclass(frozen=True)
class GCd(GroupLaw):
    c: float
    d: float

    @property
    def dim(self):
        return 3

    def mul(self, a, b):
        x1, y1, z1 = a[..., 0], a[..., 1], a[..., 2]
        x2, y2, z2 = b[..., 0], b[..., 1], b[..., 2]
        s = np.exp(self.c * x1 + self.d * y1)
        return np.stack([x1 + x2, y1 + y2, z1 + s * z2], axis=-1)

    def inv(self, a):
        x, y, z = a[..., 0], a[..., 1], a[..., 2]
        return np.stack([-x, -y, -np.exp(-(self.c * x + self.d * y)) * z], axis=-1)

    def descriptor(self):
        return {"family": "g_cd", "params": {"c": self.c, "d": self.d}, "dim": 3}


@dataclass(frozen=True)
class KCd(GroupLaw):
    c: float
    d: float

    @property
    def dim(self):
        return 3

    def mul(self, a, b):
        x1, y1, z1 = a[..., 0], a[..., 1], a[..., 2]
        x2, y2, z2 = b[..., 0], b[..., 1], b[..., 2]
        return np.stack(
            [x1 + x2, y1 + np.exp(self.c * x1) * y2, z1 + np.exp(self.d * x1) * z2],
            axis=-1,
        )

    def inv(self, a):
        x, y, z = a[..., 0], a[..., 1], a[..., 2]
        return np.stack(
            [-x, -np.exp(-self.c * x) * y, -np.exp(-self.d * x) * z], axis=-1
        )

    def descriptor(self):
        return {"family": "k_cd", "params": {"c": self.c, "d": self.d}, "dim": 3}


@dataclass(frozen=True)
class Tk(GroupLaw):
    k: float

    @property
    def dim(self):
        return 3

    def mul(self, a, b):
        x1, y1, z1 = a[..., 0], a[..., 1], a[..., 2]
        x2, y2, z2 = b[..., 0], b[..., 1], b[..., 2]
        e = np.exp(z1)
        return np.stack(
            [x1 + x2 * e + self.k * y2 * z1 * e, y1 + y2 * e, z1 + z2], axis=-1
        )

    def inv(self, a):
        x, y, z = a[..., 0], a[..., 1], a[..., 2]
        e = np.exp(-z)
        return np.stack([e * (self.k * y * z - x), -y * e, -z], axis=-1)

    def descriptor(self):
        return {"family": "t_k", "params": {"k": self.k}, "dim": 3}


def g3() -> Tk:
    """The nonsplit affine-group extension in its unit-cocycle chart."""
    return Tk(1.0)


@dataclass(frozen=True)
class Product(GroupLaw):
    a: GroupLaw
    b: GroupLaw

    @property
    def dim(self):
        return self.a.dim + self.b.dim

    def mul(self, u, v):
        k = self.a.dim
        return np.concatenate(
            [self.a.mul(u[..., :k], v[..., :k]), self.b.mul(u[..., k:], v[..., k:])],
            axis=-1,
        )

    def inv(self, u):
        k = self.a.dim
        return np.concatenate([self.a.inv(u[..., :k]), self.b.inv(u[..., k:])], axis=-1)

    def descriptor(self):
        return {
            "family": "product",
            "params": {"a": self.a.descriptor(), "b": self.b.descriptor()},
            "dim": self.dim,
        }


# ---------------------------------------------------------------------------
# element-level operations


def multiply(law: GroupLaw, a, b) -> np.ndarray:
    a = as_coords(a, law.dim)
    b = as_coords(b, law.dim)
    return law.mul(a, b)


def invert(law: GroupLaw, a) -> np.ndarray:
    a = as_coords(a, law.dim)
    return law.inv(a)


def conjugate(law: GroupLaw, g, h) -> np.ndarray:
    """g * h * g^-1."""
    g = as_coords(g, law.dim)
    h = as_coords(h, law.dim)
    return law.mul(law.mul(g, h), law.inv(g))


def commutator(law: GroupLaw, g, h) -> np.ndarray:
    """g * h * g^-1 * h^-1."""
    g = as_coords(g, law.dim)
    h = as_coords(h, law.dim)
    return law.mul(law.mul(law.mul(g, h), law.inv(g)), law.inv(h))


def sut3_to_heis(a) -> np.ndarray:
    """Chart change transporting the unitriangular law to the Heisenberg law."""
    a = np.asarray(a, dtype=float)
    if a.shape[-1] != 3:
        raise InputError("chart change needs 3 coordinates")
    x, y, z = a[..., 0], a[..., 1], a[..., 2]
    return np.stack([x, y, z - 0.5 * x * y], axis=-1)


def heis_to_sut3(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape[-1] != 3:
        raise InputError("chart change needs 3 coordinates")
    x, y, z = a[..., 0], a[..., 1], a[..., 2]
    return np.stack([x, y, z + 0.5 * x * y], axis=-1)


def one_param_through(law: KCd, g, w) -> np.ndarray:
    """One-parameter subgroup through g in a KCd chart, evaluated at w.

    Interpolates exponentially along the acting coordinate and linearly when a
    channel's exponent vanishes (in particular when g has acting coordinate 0).
    h(0) = identity, h(1) = g, and h(w + w') = h(w) * h(w').
    """
    if not isinstance(law, KCd):
        raise InputError("one_param_through is defined on KCd charts")
    g = as_coords(g, 3)
    w = np.asarray(w, dtype=float)
    t, u, v = g[0], g[1], g[2]

    def coef(exponent):
        # exponent 0 is the straight-line branch; expm1 keeps small exponents stable
        if exponent == 0.0:
            return w
        return np.expm1(exponent * w) / np.expm1(exponent)

    return np.stack(
        [w * t, coef(law.c * t) * u, coef(law.d * t) * v], axis=-1
    )


# ---------------------------------------------------------------------------
# axiom verification


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    associativity: float
    identity: float
    inverse: float
    overflow: bool = False

    def to_dict(self):
        return {
            "passed": self.passed,
            "max_associativity_residual": self.associativity,
            "max_identity_residual": self.identity,
            "max_inverse_residual": self.inverse,
            "overflow": self.overflow,
        }


def _normalized_gap(u: np.ndarray, v: np.ndarray) -> float:
    """Max of |u - v| / (1 + max(|u|, |v|)); the tolerance-policy residual.

    The exponential laws reach magnitudes ~e^24 on associativity triples, so
    raw gaps scale with the values compared; normalizing makes the residual
    the quantity the mixed abs/rel comparison actually bounds.
    """
    scale = np.maximum(np.abs(u), np.abs(v))
    return float(np.max(np.abs(u - v) / (1.0 + scale)))


def check_group_axioms(
    law: GroupLaw, cfg: SampleConfig = SampleConfig(), tol: Tolerance = DEFAULT_TOL
) -> AxiomReport:
    """Sampled residuals for associativity, identity and inverses.

    Residuals are policy-normalized gaps; the report passes when every
    sampled coordinate satisfies |u - v| <= abs_tol + rel_tol * max(|u|, |v|).
    """
    a = cfg.sample(law.dim, stream=1)
    b = cfg.sample(law.dim, stream=2)
    c = cfg.sample(law.dim, stream=3)
    e = law.identity()
    zero = np.zeros(law.dim)
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        pairs = [
            (law.mul(law.mul(a, b), c), law.mul(a, law.mul(b, c))),
            (np.concatenate([law.mul(a, e), law.mul(e, a)], axis=0),
             np.concatenate([a, a], axis=0)),
            (np.concatenate([law.mul(a, law.inv(a)), law.mul(law.inv(a), a)], axis=0),
             np.broadcast_to(zero, (2 * cfg.count, law.dim))),
        ]
    if any(not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))) for u, v in pairs):
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            resid = [
                float("inf") if not np.all(np.isfinite(u - v)) else _normalized_gap(u, v)
                for u, v in pairs
            ]
        return AxiomReport(False, resid[0], resid[1], resid[2], overflow=True)
    resid = [_normalized_gap(u, v) for u, v in pairs]
    passed = all(tol.close(u, v) for u, v in pairs)
    return AxiomReport(passed, resid[0], resid[1], resid[2])
