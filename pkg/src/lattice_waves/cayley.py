"""Closed-form heat and wave solutions on Cayley graphs of abelian groups.

The Laplacian's Fourier symbol pulls back to the finitely supported
function k*delta_e - sum_s delta_s; the heat propagator at time n is the
n-th convolution power of (delta_e minus that function), and the wave
propagators are its even/odd binomial-weighted sums.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import GroupMismatch, NotSolvable, TorsionUnsupported
from .functions import (
    SupportedFunction,
    add,
    convolve,
    convolve_power,
    delta,
    scale,
    trivial_character_sum,
    zero,
)
from .groups import GeneratorSet, GroupElement, GroupSpec, elem_add, identity


class KernelRole(enum.Enum):
    HEAT = "heat"
    WAVE_F = "wave_f"
    WAVE_G = "wave_g"


@dataclass
class Kernel:
    """A propagator kernel tagged with its role and discrete time index."""

    data: SupportedFunction
    role: KernelRole
    n: int


def inverse_symbol_a(G: GroupSpec, S: GeneratorSet) -> SupportedFunction:
    """The Laplacian symbol pulled back to the group: k*delta_e - sum_{s in S} delta_s.

    Its total mass is 0, reflecting that the symbol vanishes at the
    trivial character.
    """
    out = {identity(G): Fraction(S.degree)}
    for s in S.elements:
        out[s] = out.get(s, Fraction(0)) - 1
    return SupportedFunction(G, out)


def heat_kernel(G: GroupSpec, S: GeneratorSet, n: int) -> Kernel:
    """Heat propagator K_n = (delta_e - A)^{*n} with A the pulled-back symbol.

    The binomial-sum construction sum_j (-1)^j C(n,j) A^{*j} is the same
    function; ``heat_kernel_binomial`` computes it literally for
    cross-checking.
    """
    A = inverse_symbol_a(G, S)
    base = add(delta(G), scale(A, -1))
    return Kernel(convolve_power(base, n), KernelRole.HEAT, n)


def heat_kernel_binomial(G: GroupSpec, S: GeneratorSet, n: int) -> Kernel:
    """K_n via the literal alternating binomial sum of convolution powers."""
    A = inverse_symbol_a(G, S)
    total = delta(G)
    power = delta(G)
    for j in range(1, n + 1):
        power = convolve(power, A)
        total = add(total, scale(power, Fraction((-1) ** j * comb(n, j))))
    return Kernel(total, KernelRole.HEAT, n)


def wave_kernels(G: GroupSpec, S: GeneratorSet, n: int) -> tuple[Kernel, Kernel]:
    """Wave propagators (F_n, G_n): even/odd binomial sums of symbol powers."""
    A = inverse_symbol_a(G, S)
    f_total = zero(G)
    g_total = zero(G)
    power = delta(G)
    i = 0
    while 2 * i <= n:
        c_even = comb(n, 2 * i)
        c_odd = comb(n, 2 * i + 1)
        sign = (-1) ** i
        if c_even:
            f_total = add(f_total, scale(power, Fraction(sign * c_even)))
        if c_odd:
            g_total = add(g_total, scale(power, Fraction(sign * c_odd)))
        i += 1
        if 2 * i <= n:
            power = convolve(power, A)
    return (
        Kernel(f_total, KernelRole.WAVE_F, n),
        Kernel(g_total, KernelRole.WAVE_G, n),
    )


def heat_solve(f: SupportedFunction, S: GeneratorSet, n: int) -> SupportedFunction:
    """Solution of the heat equation at time n with initial value f."""
    return convolve(heat_kernel(f.group, S, n).data, f)


def wave_solve(
    f: SupportedFunction, g: SupportedFunction, S: GeneratorSet, n: int
) -> SupportedFunction:
    """Solution of the wave equation at time n; requires g to have zero total mass."""
    if f.group != g.group:
        raise GroupMismatch("initial value and initial velocity live on different groups")
    mass = trivial_character_sum(g)
    if mass != 0:
        raise NotSolvable(
            f"wave equation unsolvable: initial velocity has total mass {mass}",
            detail=mass,
        )
    Fn, Gn = wave_kernels(f.group, S, n)
    return add(convolve(Fn.data, f), convolve(Gn.data, g))


def symbol_eval(S: GeneratorSet, t: Sequence[float]) -> complex:
    """Evaluate the Laplacian symbol at the character of Z^d with angles t.

    Real-valued whenever S is symmetric; vanishes at t = 0.
    """
    for s in S.elements:
        if s.torsion:
            raise TorsionUnsupported("symbol evaluation requires a torsion-free group")
        if len(s.free) != len(t):
            raise TorsionUnsupported(
                f"angle vector has length {len(t)}, expected {len(s.free)}"
            )
    total = complex(S.degree)
    for s in S.elements:
        phase = sum(ti * si for ti, si in zip(t, s.free))
        total -= cmath.exp(-1j * phase)
    return total


def ball(G: GroupSpec, S: GeneratorSet, radius: int) -> set[GroupElement]:
    """The word-metric ball of the given radius around the identity."""
    current = {identity(G)}
    seen = set(current)
    for _ in range(radius):
        nxt = set()
        for x in current:
            for s in S.elements:
                y = elem_add(G, x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        current = nxt
    return seen
