"""Finitely supported rational-valued functions on a group.

The universal carrier for initial data, convolution kernels, and
solutions.  Zero values are never stored, so the support is always the
key set and all sums are finite and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import GroupMismatch
from .groups import GroupElement, GroupSpec, conforms, elem_add, elem_neg, identity, make_element

Rat = Fraction


@dataclass
class SupportedFunction:
    """A finite map GroupElement -> Fraction over a fixed group."""

    group: GroupSpec
    entries: dict[GroupElement, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for x, v in self.entries.items():
            if not conforms(self.group, x):
                x = make_element(self.group, x.free, x.torsion)
            v = Fraction(v)
            if v != 0:
                clean[x] = clean.get(x, Fraction(0)) + v
        self.entries = {x: v for x, v in clean.items() if v != 0}

    def __call__(self, x: GroupElement) -> Fraction:
        return self.entries.get(x, Fraction(0))

    def support(self) -> set[GroupElement]:
        return set(self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SupportedFunction)
            and self.group == other.group
            and self.entries == other.entries
        )

    def __iter__(self):
        return iter(self.entries.items())


def make_function(G: GroupSpec, items: Mapping[GroupElement, Fraction] | Iterable) -> SupportedFunction:
    if not isinstance(items, Mapping):
        items = dict(items)
    return SupportedFunction(G, dict(items))


def zero(G: GroupSpec) -> SupportedFunction:
    return SupportedFunction(G, {})


def delta(G: GroupSpec, x: GroupElement | None = None, value=1) -> SupportedFunction:
    """Point mass; defaults to the unit mass at the identity."""
    if x is None:
        x = identity(G)
    return SupportedFunction(G, {x: Fraction(value)})


def _require_same_group(f: SupportedFunction, g: SupportedFunction) -> None:
    if f.group != g.group:
        raise GroupMismatch("functions live on different groups")


def add(f: SupportedFunction, g: SupportedFunction) -> SupportedFunction:
    _require_same_group(f, g)
    out = dict(f.entries)
    for x, v in g.entries.items():
        out[x] = out.get(x, Fraction(0)) + v
    return SupportedFunction(f.group, out)


def sub(f: SupportedFunction, g: SupportedFunction) -> SupportedFunction:
    return add(f, scale(g, Fraction(-1)))


def scale(f: SupportedFunction, c) -> SupportedFunction:
    c = Fraction(c)
    return SupportedFunction(f.group, {x: c * v for x, v in f.entries.items()})


def convolve(f: SupportedFunction, g: SupportedFunction) -> SupportedFunction:
    """Exact group convolution (f*g)(x) = sum_y f(y) g(x-y).

    Direct sparse double loop over the two supports with hash
    accumulation; exact rationals make the accumulation order
    immaterial.
    """
    _require_same_group(f, g)
    G = f.group
    out: dict[GroupElement, Fraction] = {}
    for y, fy in f.entries.items():
        for z, gz in g.entries.items():
            x = elem_add(G, y, z)
            out[x] = out.get(x, Fraction(0)) + fy * gz
    return SupportedFunction(G, out)


def convolve_power(f: SupportedFunction, n: int) -> SupportedFunction:
    """n-fold convolution power by repeated squaring; n=0 gives delta_e."""
    result = delta(f.group)
    base = f
    while n > 0:
        if n & 1:
            result = convolve(result, base)
        n >>= 1
        if n:
            base = convolve(base, base)
    return result


def trivial_character_sum(f: SupportedFunction) -> Fraction:
    """The value of the transform at the trivial character: the total mass of f."""
    return sum(f.entries.values(), Fraction(0))


def reflect(f: SupportedFunction) -> SupportedFunction:
    """The function x -> f(-x)."""
    G = f.group
    return SupportedFunction(G, {elem_neg(G, x): v for x, v in f.entries.items()})


def l1_norm(f: SupportedFunction) -> Fraction:
    return sum((abs(v) for v in f.entries.values()), Fraction(0))


def l2_norm_squared(f: SupportedFunction) -> Fraction:
    return sum((v * v for v in f.entries.values()), Fraction(0))
