"""Brute-force time steppers used as ground truth for the closed forms.

Each stepper applies one exact step of the defining recurrence, sharing
nothing with the closed-form engine beyond the scalar and element types.
They are deliberately naive and slow.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import pi

from .cosets import CosetProblem
from .errors import CosetInconstant, GroupMismatch, TorsionUnsupported
from .functions import SupportedFunction
from .groups import GeneratorSet, GroupElement, elem_add
from .tree import TreeFunction, neighbors


def cayley_heat_step(u: SupportedFunction, S: GeneratorSet) -> SupportedFunction:
    """u(x, n+1) = sum_i u(x + s_i, n) - (k-1) u(x, n)."""
    G = u.group
    k = S.degree
    out: dict[GroupElement, Fraction] = {}
    for x, v in u.entries.items():
        out[x] = out.get(x, Fraction(0)) - (k - 1) * v
        for s in S.elements:
            # u(x+s) contributes to position x; equivalently v spreads to x-s,
            # and S = -S makes the two bookkeepings identical.
            y = elem_add(G, x, s)
            out[y] = out.get(y, Fraction(0)) + v
    return SupportedFunction(G, out)


def cayley_wave_step(
    u_prev: SupportedFunction, u_curr: SupportedFunction, S: GeneratorSet
) -> SupportedFunction:
    """u(x, n+2) = 2 u(x, n+1) + sum_i u(x + s_i, n) - (k+1) u(x, n)."""
    if u_prev.group != u_curr.group:
        raise GroupMismatch("wave step arguments live on different groups")
    G = u_curr.group
    k = S.degree
    out: dict[GroupElement, Fraction] = {}
    for x, v in u_curr.entries.items():
        out[x] = out.get(x, Fraction(0)) + 2 * v
    for x, v in u_prev.entries.items():
        out[x] = out.get(x, Fraction(0)) - (k + 1) * v
        for s in S.elements:
            y = elem_add(G, x, s)
            out[y] = out.get(y, Fraction(0)) + v
    return SupportedFunction(G, out)


def cayley_wave_trajectory(
    f: SupportedFunction, g: SupportedFunction, S: GeneratorSet, n: int
) -> list[SupportedFunction]:
    """u(.,0) .. u(.,n) by direct stepping, seeded by u0 = f, u1 = f + g."""
    from .functions import add

    traj = [f]
    if n >= 1:
        traj.append(add(f, g))
    while len(traj) <= n:
        traj.append(cayley_wave_step(traj[-2], traj[-1], S))
    return traj[: n + 1]


def _check_coset_constant(u: SupportedFunction, P: CosetProblem) -> None:
    values: dict[GroupElement, Fraction] = {}
    for x, v in u.entries.items():
        q = P.quot.project(x)
        if q in values and values[q] != v:
            raise CosetInconstant(f"function takes two values on the coset of {x}")
        values[q] = v
    for q, v in values.items():
        if v != 0 and any(u(y) != v for y in P.quot.fiber(q)):
            raise CosetInconstant(f"function is not constant on the fiber of {q}")


def lifted_coset_heat_step(u: SupportedFunction, P: CosetProblem) -> SupportedFunction:
    """One step of the scaled-Laplacian recurrence on the lifted graph.

    u(x, n+1) = u(x, n) - (1/|H|) (k |H| u(x, n) - sum_{h in H} sum_i u(x+h+s_i, n)),
    where the s_i run over one representative per distinct coset of S.
    """
    _check_coset_constant(u, P)
    G = P.base_group
    k = P.S_tilde.degree
    h_order = P.H_order
    out: dict[GroupElement, Fraction] = {}
    for x, v in u.entries.items():
        out[x] = out.get(x, Fraction(0)) + v - k * v
        spread = Fraction(v, h_order)
        for h in P.quot.subgroup:
            for s in P.coset_reps:
                y = elem_add(G, elem_add(G, x, h), s)
                out[y] = out.get(y, Fraction(0)) + spread
    result = SupportedFunction(G, out)
    _check_coset_constant(result, P)
    return result


def lifted_coset_wave_step(
    u_prev: SupportedFunction, u_curr: SupportedFunction, P: CosetProblem
) -> SupportedFunction:
    """One step of the scaled-Laplacian wave recurrence on the lifted graph.

    u(x, n+2) = 2 u(x, n+1) - u(x, n) - (1/|H|)(k |H| u(x, n) - sum_{h,i} u(x+h+s_i, n)).
    """
    _check_coset_constant(u_prev, P)
    _check_coset_constant(u_curr, P)
    G = P.base_group
    k = P.S_tilde.degree
    h_order = P.H_order
    out: dict[GroupElement, Fraction] = {}
    for x, v in u_curr.entries.items():
        out[x] = out.get(x, Fraction(0)) + 2 * v
    for x, v in u_prev.entries.items():
        out[x] = out.get(x, Fraction(0)) - v - k * v
        spread = Fraction(v, h_order)
        for h in P.quot.subgroup:
            for s in P.coset_reps:
                y = elem_add(G, elem_add(G, x, h), s)
                out[y] = out.get(y, Fraction(0)) + spread
    result = SupportedFunction(G, out)
    _check_coset_constant(result, P)
    return result


def tree_step_heat(u: TreeFunction) -> TreeFunction:
    """u(x, n+1) = sum_{y ~ x} u(y, n) - (k-1) u(x, n) over reduced-word neighbors."""
    k = u.k
    out: dict[tuple, Fraction] = {}
    for x, v in u.entries.items():
        out[x] = out.get(x, Fraction(0)) - (k - 1) * v
        for y in neighbors(x, k):
            out[y] = out.get(y, Fraction(0)) + v
    return TreeFunction(k, out)


def tree_step_wave(u_prev: TreeFunction, u_curr: TreeFunction) -> TreeFunction:
    """u(x, n+2) = 2 u(x, n+1) + sum_{y ~ x} u(y, n) - (k+1) u(x, n)."""
    k = u_curr.k
    out: dict[tuple, Fraction] = {}
    for x, v in u_curr.entries.items():
        out[x] = out.get(x, Fraction(0)) + 2 * v
    for x, v in u_prev.entries.items():
        out[x] = out.get(x, Fraction(0)) - (k + 1) * v
        for y in neighbors(x, k):
            out[y] = out.get(y, Fraction(0)) + v
    return TreeFunction(k, out)


@dataclass
class PathProfile:
    """A finitely supported profile on the integers (the radialized line)."""

    values: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.values = {int(r): Fraction(v) for r, v in self.values.items() if v != 0}

    def __call__(self, r: int) -> Fraction:
        return self.values.get(r, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, PathProfile) and self.values == other.values


def even_profile(radial: list[Fraction]) -> PathProfile:
    """Even extension of a radial profile (r >= 0) to the whole line."""
    values = {r: v for r, v in enumerate(radial)}
    for r, v in enumerate(radial):
        if r > 0:
            values[-r] = v
    return PathProfile(values)


def path_step_heat(u: PathProfile, k: int) -> PathProfile:
    """u(r, n+1) = (k-1) u(r+1, n) + u(r-1, n) - (k-1) u(r, n).

    The asymmetric reduction of the tree step; for k = 2 it degenerates to
    the symmetric path step.
    """
    out: dict[int, Fraction] = {}
    for r, v in u.values.items():
        out[r] = out.get(r, Fraction(0)) - (k - 1) * v
        # v at r feeds (k-1)*v to r-1 (as u(r+1) seen from r-1) and v to r+1.
        out[r - 1] = out.get(r - 1, Fraction(0)) + (k - 1) * v
        out[r + 1] = out.get(r + 1, Fraction(0)) + v
    return PathProfile(out)


def path_step_wave(u_prev: PathProfile, u_curr: PathProfile, k: int) -> PathProfile:
    """u(r, n+2) = 2 u(r, n+1) - (k+1) u(r, n) + (k-1) u(r+1, n) + u(r-1, n)."""
    out: dict[int, Fraction] = {}
    for r, v in u_curr.values.items():
        out[r] = out.get(r, Fraction(0)) + 2 * v
    for r, v in u_prev.values.items():
        out[r] = out.get(r, Fraction(0)) - (k + 1) * v
        out[r - 1] = out.get(r - 1, Fraction(0)) + (k - 1) * v
        out[r + 1] = out.get(r + 1, Fraction(0)) + v
    return PathProfile(out)


def radial_step_heat(profile: list[Fraction], k: int) -> list[Fraction]:
    """One heat step of the radialized tree recurrence on r >= 0.

    u(r, n+1) = (k-1) u(r+1, n) + u(r-1, n) - (k-1) u(r, n), with the even
    boundary value u(-1, n) = u(1, n) that the spherical-mean reduction
    imposes at the center.  Stepping the radial profile of the initial data
    this way and reading r = 0 reproduces the tree solution exactly.
    """

    def at(r: int) -> Fraction:
        r = abs(r)
        return profile[r] if r < len(profile) else Fraction(0)

    return [
        (k - 1) * at(r + 1) + at(r - 1) - (k - 1) * at(r)
        for r in range(len(profile) + 1)
    ]


def radial_step_wave(
    prev: list[Fraction], curr: list[Fraction], k: int
) -> list[Fraction]:
    """One wave step of the radialized tree recurrence on r >= 0.

    u(r, n+2) = 2 u(r, n+1) - (k+1) u(r, n) + (k-1) u(r+1, n) + u(r-1, n),
    again with the even boundary value at the center.
    """

    def at(p: list[Fraction], r: int) -> Fraction:
        r = abs(r)
        return p[r] if r < len(p) else Fraction(0)

    return [
        2 * at(curr, r) - (k + 1) * at(prev, r) + (k - 1) * at(prev, r + 1) + at(prev, r - 1)
        for r in range(max(len(prev), len(curr)) + 1)
    ]


def quadrature_kernel(S: GeneratorSet, n: int, r: int) -> float:
    """Heat kernel coefficient on Z by trapezoid quadrature of the symbol power.

    Uses N = 2*n*span + 2 uniform nodes, where span is the largest
    generator magnitude (so N = 2n+2 for unit generators); the integrand is
    a trigonometric polynomial of degree at most n*span + |r| < N, for
    which the uniform trapezoid rule is exact up to floating-point
    rounding.
    """
    for s in S.elements:
        if s.torsion or len(s.free) != 1:
            raise TorsionUnsupported("quadrature diagnostic is restricted to Z")
    k = S.degree
    span = max(abs(s.free[0]) for s in S.elements)
    N = 2 * n * span + 2
    total = 0.0 + 0.0j
    for m in range(N):
        t = 2 * pi * m / N
        a = k - sum(cmath.exp(-1j * t * s.free[0]) for s in S.elements)
        total += (1 - a) ** n * cmath.exp(-1j * r * t)
    return (total / N).real
