"""Cochain calculus and group extensions built from 2-cocycles.

A degree-n cochain is a function from n-tuples of acting-chart elements to
module elements. The coboundary of an n-cochain f is

    (df)(g1, ..., g_{n+1}) = gamma(g1) f(g2, ..., g_{n+1})
                             + sum_i (-1)^i f(g1, ..., g_i g_{i+1}, ..., g_{n+1})
                             + (-1)^{n+1} f(g1, ..., gn)

Cochain callables must be pure and accept stacked arguments of shape
(..., dim H), returning (..., dim N).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .actions import ExpAction, act, affine_on_semidirect, scale_factors, trivial
from .errors import DomainError, InputError
from .groups import Additive, GroupLaw, SemidirectRR
from .orders import LexOrder, OrderedGroupSpec, lex_less
from .tolerance import DEFAULT_TOL, SampleConfig, Tolerance


@dataclass(frozen=True)
class GModule:
    """An abelian chart group N acted on exponentially by a chart group H."""

    H: GroupLaw
    N: Additive
    gamma: ExpAction

    def __post_init__(self):
        if not isinstance(self.N, Additive):
            raise InputError("module part must be an additive law")
        if self.gamma.acting_dim != self.H.dim:
            raise InputError("action acting-chart dimension does not match H")
        if self.gamma.module_dim != self.N.dim:
            raise InputError("action module dimension does not match N")

    def act(self, g: np.ndarray, n: np.ndarray) -> np.ndarray:
        return act(self.gamma, g, n)


def heis_module() -> GModule:
    return GModule(H=Additive(2), N=Additive(1), gamma=trivial(2))


def g3_module(c: float = 1.0) -> GModule:
    return GModule(H=SemidirectRR(1.0), N=Additive(1), gamma=affine_on_semidirect(c))


@dataclass(frozen=True)
class Cochain:
    degree: int
    fn: Callable
    module: GModule
    tag: str | None = None

    def __post_init__(self):
        if self.degree < 0:
            raise InputError("cochain degree must be >= 0")

    def __call__(self, *args: np.ndarray) -> np.ndarray:
        if len(args) != self.degree:
            raise InputError(f"degree-{self.degree} cochain takes {self.degree} arguments")
        return self.fn(*args)


def constant_cochain(module: GModule, value) -> Cochain:
    v = np.atleast_1d(np.asarray(value, dtype=float))
    if v.shape != (module.N.dim,):
        raise InputError("constant must be a module element")
    return Cochain(degree=0, fn=lambda: v, module=module)


def heis_cocycle(c: float) -> Cochain:
    """The determinant 2-cocycle on the abelian plane: c * (x1 y2 - y1 x2)."""

    def fn(g, h):
        return (c * (g[..., 0] * h[..., 1] - g[..., 1] * h[..., 0]))[..., None]

    return Cochain(degree=2, fn=fn, module=heis_module(), tag="heis")


def g3_cocycle(k: float) -> Cochain:
    """The nonsplit 2-cocycle on the affine chart: k * y2 z1 e^{z1}."""

    def fn(g, h):
        return (k * h[..., 0] * g[..., 1] * np.exp(g[..., 1]))[..., None]

    return Cochain(degree=2, fn=fn, module=g3_module(1.0), tag="g3")


def coboundary(f: Cochain) -> Cochain:
    """The degree-raising coboundary of a cochain, evaluated pointwise."""
    module = f.module
    n = f.degree

    if n == 0:
        def dfn(g1):
            m = f.fn()
            return module.act(g1, m) - m

    else:
        def dfn(*gs):
            acc = module.act(gs[0], f.fn(*gs[1:]))
            for i in range(1, n + 1):
                merged = (
                    gs[: i - 1]
                    + (module.H.mul(gs[i - 1], gs[i]),)
                    + gs[i + 1:]
                )
                acc = acc + (-1.0) ** i * f.fn(*merged)
            acc = acc + (-1.0) ** (n + 1) * f.fn(*gs[:-1])
            return acc

    return Cochain(degree=n + 1, fn=dfn, module=module)


def cocycle_residual(f: Cochain, cfg: SampleConfig = SampleConfig()) -> float:
    """Max norm of the coboundary of a degree-2 cochain over sampled triples."""
    if f.degree != 2:
        raise InputError("cocycle residual is defined for degree-2 cochains")
    df = coboundary(f)
    dim = f.module.H.dim
    g = cfg.sample(dim, stream=31)
    h = cfg.sample(dim, stream=32)
    k = cfg.sample(dim, stream=33)
    return float(np.max(np.abs(df.fn(g, h, k))))


@dataclass(frozen=True)
class CoboundaryReport:
    passed: bool
    residual: float

    def to_dict(self):
        return {"passed": self.passed, "max_residual": self.residual}


def verify_coboundary_witness(
    f: Cochain,
    g: Cochain,
    cfg: SampleConfig = SampleConfig(),
    tol: Tolerance = DEFAULT_TOL,
) -> CoboundaryReport:
    """Check that the degree-1 cochain g satisfies dg = f on sampled pairs."""
    if f.degree != 2 or g.degree != 1:
        raise InputError("witness check takes a degree-2 cochain and a degree-1 cochain")
    if f.module != g.module:
        raise InputError("cochains live over different modules")
    dg = coboundary(g)
    u = cfg.sample(f.module.H.dim, stream=41)
    v = cfg.sample(f.module.H.dim, stream=42)
    residual = float(np.max(np.abs(dg.fn(u, v) - f.fn(u, v))))
    return CoboundaryReport(passed=residual <= tol.bound(1.0), residual=residual)


def normalize_cocycle(f: Cochain) -> Cochain:
    """Shift f by a constant coboundary so that f(e, e) = 0."""
    module = f.module
    e = module.H.identity()
    v = np.atleast_1d(f.fn(e, e))
    if np.all(v == 0.0):
        return f
    shift = coboundary(Cochain(degree=1, fn=lambda g: np.broadcast_to(
        v, g.shape[:-1] + (module.N.dim,)), module=module))

    def fn(g, h):
        return f.fn(g, h) - shift.fn(g, h)

    return Cochain(degree=2, fn=fn, module=module, tag=f.tag)


@dataclass(frozen=True)
class CocycleLaw(GroupLaw):
    """Extension law on module-first coordinates (N..., H...) built from a 2-cocycle."""

    module: GModule
    cochain: Cochain

    @property
    def dim(self):
        return self.module.N.dim + self.module.H.dim

    def _split(self, a):
        k = self.module.N.dim
        return a[..., :k], a[..., k:]

    def mul(self, a, b):
        m1, g1 = self._split(a)
        m2, g2 = self._split(b)
        part_n = m1 + self.module.act(g1, m2) + self.cochain.fn(g1, g2)
        return np.concatenate([part_n, self.module.H.mul(g1, g2)], axis=-1)

    def inv(self, a):
        m, g = self._split(a)
        ginv = self.module.H.inv(g)
        corr = m + self.cochain.fn(g, ginv)
        return np.concatenate([-self.module.act(ginv, corr), ginv], axis=-1)

    def descriptor(self):
        params = {}
        if self.cochain.tag == "heis":
            # recover the coefficient from f((1,0),(0,1))
            params = {"cocycle": "heis", "c": float(self.cochain.fn(
                np.array([1.0, 0.0]), np.array([0.0, 1.0]))[0])}
        elif self.cochain.tag == "g3":
            params = {"cocycle": "g3", "k": float(self.cochain.fn(
                np.array([0.0, 1.0]), np.array([1.0, 0.0]))[0] / np.e)}
        return {"family": "from_cocycle", "params": params, "dim": self.dim}


def extension_from_cocycle(
    module: GModule,
    f: Cochain,
    cfg: SampleConfig = SampleConfig(),
    tol: Tolerance = DEFAULT_TOL,
) -> CocycleLaw:
    """Build the extension group law (a, g)(b, h) = (a + gamma(g) b + f(g, h), g h).

    Rejects cochains whose coboundary does not vanish on samples, since the
    resulting law would not be associative.
    """
    if f.degree != 2:
        raise InputError("extensions are built from degree-2 cochains")
    if f.module != module:
        raise InputError("cochain module does not match the extension module")
    f = normalize_cocycle(f)
    residual = cocycle_residual(f, cfg)
    scale = max(1.0, _sample_scale(f, cfg))
    if residual > tol.bound(scale):
        raise DomainError(
            f"cochain is not a cocycle (residual {residual:.3g}); extension would "
            "not be associative"
        )
    return CocycleLaw(module=module, cochain=f)


def _sample_scale(f: Cochain, cfg: SampleConfig) -> float:
    g = cfg.sample(f.module.H.dim, stream=31, count=min(cfg.count, 64))
    h = cfg.sample(f.module.H.dim, stream=32, count=min(cfg.count, 64))
    return float(np.max(np.abs(f.fn(g, h))))


def ordered_extension(
    module: GModule,
    order_h: LexOrder,
    order_n: LexOrder,
    f: Cochain,
    cfg: SampleConfig = SampleConfig(),
    tol: Tolerance = DEFAULT_TOL,
) -> OrderedGroupSpec:
    """Extension law ordered lexicographically, quotient chart most significant.

    Requires the action to preserve the module order; exponential scalings are
    positive, which is verified on samples rather than assumed.
    """
    if order_h.dim != module.H.dim or order_n.dim != module.N.dim:
        raise InputError("orders do not match module chart dimensions")
    if not _action_order_preserving(module, order_n, cfg):
        raise DomainError("action does not preserve the module order")
    law = extension_from_cocycle(module, f, cfg, tol)
    k = module.N.dim
    significance = tuple(k + i for i in order_h.significance) + tuple(
        order_n.significance
    )
    return OrderedGroupSpec(law=law, order=LexOrder(significance))


def _action_order_preserving(module: GModule, order_n: LexOrder, cfg: SampleConfig) -> bool:
    g = cfg.sample(module.H.dim, stream=51, count=min(cfg.count, 256))
    factors = scale_factors(module.gamma, g)
    if np.any(factors <= 0):
        return False
    n1 = cfg.sample(module.N.dim, stream=52, count=g.shape[0])
    n2 = cfg.sample(module.N.dim, stream=53, count=g.shape[0])
    swap = lex_less(order_n, n2, n1)
    lo = np.where(swap[:, None], n2, n1)
    hi = np.where(swap[:, None], n1, n2)
    ties = ~lex_less(order_n, lo, hi)
    keep = ~ties
    return bool(np.all(lex_less(order_n, factors[keep] * lo[keep], factors[keep] * hi[keep])))
