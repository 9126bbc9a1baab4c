"""Lexicographic orders on charts and ordered-group verification.

Comparisons are exact: sampled continuous coordinates tie with probability
zero, and deliberately constructed ties must compare equal, so no tolerance
is applied anywhere in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .groups import GroupLaw, as_coords
from .tolerance import SampleConfig


class Comparison(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class LexOrder:
    """Coordinate significance, most significant first: (0, 1, 2) is x >> y >> z."""

    significance: tuple[int, ...]

    def __post_init__(self):
        sig = tuple(int(i) for i in self.significance)
        object.__setattr__(self, "significance", sig)
        if sorted(sig) != list(range(len(sig))):
            raise InputError(f"significance {sig} is not a permutation of 0..{len(sig) - 1}")

    @property
    def dim(self) -> int:
        return len(self.significance)


@dataclass(frozen=True)
class OrderedGroupSpec:
    law: GroupLaw
    order: LexOrder

    def __post_init__(self):
        if self.law.dim != self.order.dim:
            raise InputError("order dimension does not match law dimension")


def compare(order: LexOrder, a, b) -> Comparison:
    a = as_coords(a, order.dim)
    b = as_coords(b, order.dim)
    for idx in order.significance:
        if a[idx] < b[idx]:
            return Comparison.LT
        if a[idx] > b[idx]:
            return Comparison.GT
    return Comparison.EQ


def lex_less(order: LexOrder, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized strict a < b along significance; shapes (..., dim)."""
    less = np.zeros(a.shape[:-1], dtype=bool)
    decided = np.zeros(a.shape[:-1], dtype=bool)
    for idx in order.significance:
        lt = a[..., idx] < b[..., idx]
        gt = a[..., idx] > b[..., idx]
        less |= ~decided & lt
        decided |= lt | gt
    return less


@dataclass(frozen=True)
class InvarianceReport:
    left_ok: bool
    right_ok: bool
    checked: int
    counterexample_left: tuple | None = None
    counterexample_right: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.left_ok and self.right_ok

    def to_dict(self):
        def ce(t):
            return None if t is None else {
                "g": list(t[0]), "h": list(t[1]), "h_prime": list(t[2])
            }

        return {
            "passed": self.passed,
            "left_ok": self.left_ok,
            "right_ok": self.right_ok,
            "pairs_checked": self.checked,
            "counterexample_left": ce(self.counterexample_left),
            "counterexample_right": ce(self.counterexample_right),
        }


def _ordered_pairs(order: LexOrder, cfg: SampleConfig, dim: int):
    """Sampled h < h' pairs, including pairs sharing leading significance coords.

    Random pairs almost surely differ in the most significant coordinate, so
    tie-breaking coordinates are exercised with shared-prefix variants.
    """
    h = cfg.sample(dim, stream=11)
    hp = cfg.sample(dim, stream=12)
    blocks = [(h, hp)]
    for k in range(1, dim):
        shared = hp.copy()
        for idx in order.significance[:k]:
            shared[:, idx] = h[:, idx]
        blocks.append((h, shared))
    lo, hi = [], []
    for a, b in blocks:
        swap = lex_less(order, b, a)
        eq = ~swap & ~lex_less(order, a, b)
        a2 = np.where(swap[:, None], b, a)
        b2 = np.where(swap[:, None], a, b)
        lo.append(a2[~eq])
        hi.append(b2[~eq])
    return np.concatenate(lo, axis=0), np.concatenate(hi, axis=0)


def check_translation_invariance(
    spec: OrderedGroupSpec, cfg: SampleConfig = SampleConfig()
) -> InvarianceReport:
    """Verify g*h < g*h' (left) and h*g < h'*g (right) on sampled h < h'."""
    law, order = spec.law, spec.order
    lo, hi = _ordered_pairs(order, cfg, law.dim)
    g = cfg.sample(law.dim, stream=13, count=lo.shape[0])

    left_bad = ~lex_less(order, law.mul(g, lo), law.mul(g, hi))
    right_bad = ~lex_less(order, law.mul(lo, g), law.mul(hi, g))

    def first(bad):
        idx = np.flatnonzero(bad)
        if idx.size == 0:
            return None
        i = int(idx[0])
        return (g[i].copy(), lo[i].copy(), hi[i].copy())

    return InvarianceReport(
        left_ok=not bool(left_bad.any()),
        right_ok=not bool(right_bad.any()),
        checked=int(lo.shape[0]),
        counterexample_left=first(left_bad),
        counterexample_right=first(right_bad),
    )


def _supported(cfg: SampleConfig, dim: int, coords: tuple[int, ...], stream: int) -> np.ndarray:
    full = cfg.sample(dim, stream=stream)
    out = np.zeros_like(full)
    for idx in coords:
        out[:, idx] = full[:, idx]
    return out


def check_conjugation_order_preserving(
    spec: OrderedGroupSpec,
    normal_coords: tuple[int, ...],
    cfg: SampleConfig = SampleConfig(),
) -> InvarianceReport:
    """Verify that conjugation by sampled g preserves order on the coordinate
    subgroup supported on normal_coords (which must be closed under the law)."""
    law, order = spec.law, spec.order
    coords = tuple(sorted(set(int(i) for i in normal_coords)))
    if any(i < 0 or i >= law.dim for i in coords):
        raise InputError("normal_coords outside chart dimensions")

    probe_a = _supported(cfg, law.dim, coords, stream=21)
    probe_b = _supported(cfg, law.dim, coords, stream=22)
    prod = law.mul(probe_a, probe_b)
    outside = [i for i in range(law.dim) if i not in coords]
    if outside and np.max(np.abs(prod[:, outside])) > 1e-12:
        raise InputError(f"coordinates {coords} are not closed under multiplication")

    n1 = _supported(cfg, law.dim, coords, stream=23)
    n2 = _supported(cfg, law.dim, coords, stream=24)
    swap = lex_less(order, n2, n1)
    eq = ~swap & ~lex_less(order, n1, n2)
    lo = np.where(swap[:, None], n2, n1)[~eq]
    hi = np.where(swap[:, None], n1, n2)[~eq]
    g = cfg.sample(law.dim, stream=25, count=lo.shape[0])
    ginv = law.inv(g)
    c_lo = law.mul(law.mul(g, lo), ginv)
    c_hi = law.mul(law.mul(g, hi), ginv)
    bad = ~lex_less(order, c_lo, c_hi)
    idx = np.flatnonzero(bad)
    ce = None if idx.size == 0 else (g[int(idx[0])], lo[int(idx[0])], hi[int(idx[0])])
    return InvarianceReport(
        left_ok=not bool(bad.any()),
        right_ok=True,
        checked=int(lo.shape[0]),
        counterexample_left=ce,
    )
