"""Heat and wave solutions on the k-regular tree via spherical means.

Vertices are reduced words over k involutive generators (no two adjacent
letters equal; the empty word is the root).  Radializing around an
evaluation vertex turns the tree Laplacian into a drifted path operator,
and the closed-form solutions become weighted sums of sphere sums of the
initial data.  All sphere sums iterate over the (finite) support of the
data, never over the exponentially large spheres themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotSolvable, ShapeMismatch

TreeVertex = tuple[int, ...]

ROOT: TreeVertex = ()


def make_vertex(word: Iterable[int], k: int) -> TreeVertex:
    """Validate a reduced word: letters in 1..k, no adjacent repeats."""
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i <= k:
            raise ShapeMismatch(f"letter {i} outside 1..{k}")
    for a, b in zip(word, word[1:]):
        if a == b:
            raise ShapeMismatch(f"word {word} is not reduced (adjacent repeat)")
    return word


def tree_distance(x: TreeVertex, y: TreeVertex) -> int:
    """Graph distance: word lengths minus twice the common prefix."""
    c = 0
    for a, b in zip(x, y):
        if a != b:
            break
        c += 1
    return (len(x) - c) + (len(y) - c)


def neighbors(x: TreeVertex, k: int) -> list[TreeVertex]:
    """The k adjacent vertices: one truncation (unless at the root) plus extensions."""
    out = []
    if x:
        out.append(x[:-1])
        out.extend(x + (i,) for i in range(1, k + 1) if i != x[-1])
    else:
        out.extend(((i,) for i in range(1, k + 1)))
    return out


@dataclass
class TreeFunction:
    """A finitely supported map from reduced words to rationals."""

    k: int
    entries: dict[TreeVertex, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for x, v in self.entries.items():
            x = make_vertex(x, self.k)
            v = Fraction(v)
            if v != 0:
                clean[x] = v
        self.entries = clean

    def __call__(self, x: TreeVertex) -> Fraction:
        return self.entries.get(tuple(x), Fraction(0))

    def support(self) -> set[TreeVertex]:
        return set(self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TreeFunction)
            and self.k == other.k
            and self.entries == other.entries
        )


def sphere_size(k: int, r: int) -> int:
    """Number of vertices at distance r from any fixed vertex."""
    if r < 0:
        raise IndexOutOfRange(f"radius must be non-negative, got {r}")
    if r == 0:
        return 1
    return k * (k - 1) ** (r - 1)


def sphere_sums(f: TreeFunction, x: TreeVertex) -> dict[int, Fraction]:
    """Sum of f over each sphere around x, bucketing the support by distance."""
    out: dict[int, Fraction] = {}
    for y, v in f.entries.items():
        r = tree_distance(x, y)
        out[r] = out.get(r, Fraction(0)) + v
    return out


def spherical_mean(f: TreeFunction, x: TreeVertex, r: int) -> Fraction:
    """Average of f over the sphere of radius |r| around x (even in r)."""
    r = abs(r)
    total = Fraction(0)
    for y, v in f.entries.items():
        if tree_distance(x, y) == r:
            total += v
    return total / sphere_size(f.k, r)


def path_reduce(f: TreeFunction, x: TreeVertex) -> list[Fraction]:
    """The radial profile r -> M_f(x,r) for r >= 0, up to the support radius."""
    sums = sphere_sums(f, x)
    if not sums:
        return []
    rmax = max(sums)
    return [sums.get(r, Fraction(0)) / sphere_size(f.k, r) for r in range(rmax + 1)]


def alpha_coeff(j: int, s: int, k: int) -> int:
    """Coefficient of the s-th harmonic in the j-th power of the drifted path symbol."""
    if abs(s) > j:
        raise IndexOutOfRange(f"harmonic index {s} outside [-{j}, {j}]")
    if s >= 0:
        return (-1) ** s * sum(
            comb(j, l + s) * comb(j, l) * (k - 1) ** l for l in range(j - s + 1)
        )
    return (-1) ** (-s) * sum(
        comb(j, l - s) * comb(j, l) * (k - 1) ** (l - s) for l in range(j + s + 1)
    )


@dataclass
class WeightTable:
    """Closed-form sphere weights: value at x is sum_s weights[s] * (sphere sum at radius s)."""

    k: int
    n: int
    weights: list[Fraction]

    def apply(self, f: TreeFunction, x: TreeVertex) -> Fraction:
        sums = sphere_sums(f, x)
        return sum(
            (w * sums[s] for s, w in enumerate(self.weights) if s in sums),
            Fraction(0),
        )


def _advance_row(row: list[Fraction], k: int) -> list[Fraction]:
    """Advance the evaluation functional of the radialized heat step by one step.

    Radializing one tree heat step around the evaluation vertex gives the
    half-line update  p(r) -> (k-1) p(r+1) + p(|r-1|) - (k-1) p(r)  on radial
    profiles, where |r-1| encodes the even boundary M(-1) = M(1) that the
    spherical-mean reduction imposes at the center.  The value at the center
    after n steps is a linear functional of the initial profile; this
    right-multiplies its coefficient row by the update matrix.
    """
    out = [Fraction(0)] * (len(row) + 1)
    for r, c in enumerate(row):
        if not c:
            continue
        out[r] -= (k - 1) * c
        if r == 0:
            out[1] += k * c
        else:
            out[r + 1] += (k - 1) * c
            out[r - 1] += c
    return out


def _wave_row_next(prev: list[Fraction], curr: list[Fraction], k: int) -> list[Fraction]:
    # Dual form of u(n+2) = 2u(n+1) - u(n) - (Laplacian u)(n); the Laplacian
    # row is prev minus the advanced prev, so the update is 2*curr - 2*prev
    # plus the advanced prev.
    out = _advance_row(prev, k)
    for r, c in enumerate(prev):
        out[r] -= 2 * c
    for r, c in enumerate(curr):
        out[r] += 2 * c
    return out


def _trim_row(row: list[Fraction], radius: int) -> list[Fraction]:
    if any(row[radius + 1 :]):
        raise AssertionError("weight row exceeds its guaranteed support radius")
    return row[: radius + 1] + [Fraction(0)] * (radius + 1 - len(row))


def tree_heat_weights(k: int, n: int) -> WeightTable:
    """Heat sphere weights for radii 0..n.

    Weight s is the solution value at the center, after n steps of the
    radialized heat recurrence, of the profile concentrated on the radius-s
    sphere with mean 1/S(s); equivalently the heat kernel value at any
    vertex at distance s.  For k = 2 the table reproduces the kernel on Z
    grouped as K_n(s) + K_n(-s).
    """
    row = [Fraction(1)]
    for _ in range(n):
        row = _advance_row(row, k)
    weights = [row[s] / sphere_size(k, s) for s in range(n + 1)]
    return WeightTable(k, n, weights)


def tree_wave_weights(k: int, n: int) -> tuple[WeightTable, WeightTable]:
    """Wave sphere weights: the pair (initial-value table, initial-velocity table).

    The first covers radii 0..floor(n/2), the second 0..floor((n-1)/2)
    (empty for n = 0): the wave solution at time n is a polynomial of degree
    floor(n/2) (resp. floor((n-1)/2)) in the Laplacian applied to f (resp.
    g), and the radialized Laplacian moves mass one radius per application.
    """
    if n == 0:
        return WeightTable(k, 0, [Fraction(1)]), WeightTable(k, 0, [])
    f_prev, f_curr = [Fraction(1)], [Fraction(1)]
    g_prev, g_curr = [Fraction(0)], [Fraction(1)]
    for _ in range(n - 1):
        f_prev, f_curr = f_curr, _wave_row_next(f_prev, f_curr, k)
        g_prev, g_curr = g_curr, _wave_row_next(g_prev, g_curr, k)
    f_row = _trim_row(f_curr, n // 2)
    g_row = _trim_row(g_curr, (n - 1) // 2)
    f_weights = [w / sphere_size(k, s) for s, w in enumerate(f_row)]
    g_weights = [w / sphere_size(k, s) for s, w in enumerate(g_row)]
    return WeightTable(k, n, f_weights), WeightTable(k, n, g_weights)


def tree_heat_solve(f: TreeFunction, n: int, eval_at: Sequence[TreeVertex]) -> TreeFunction:
    """Heat solution at time n, evaluated at the requested vertices."""
    table = tree_heat_weights(f.k, n)
    out = {}
    for x in eval_at:
        x = make_vertex(x, f.k)
        out[x] = table.apply(f, x)
    return TreeFunction(f.k, out)


def radial_mass(g: TreeFunction, x: TreeVertex) -> Fraction:
    """Total mass of the radialization of g around x: M_g(x,0) + 2*sum_{r>=1} M_g(x,r)."""
    profile = path_reduce(g, x)
    if not profile:
        return Fraction(0)
    return profile[0] + 2 * sum(profile[1:], Fraction(0))


def tree_wave_solve(
    f: TreeFunction, g: TreeFunction, n: int, eval_at: Sequence[TreeVertex]
) -> TreeFunction:
    """Wave solution at time n at the requested vertices.

    The zero-mean compatibility condition applies to the radialization of
    g around each evaluation vertex and is checked at every one of them.
    """
    if f.k != g.k:
        raise ShapeMismatch("initial value and velocity live on trees of different degree")
    ftable, gtable = tree_wave_weights(f.k, n)
    out = {}
    for x in eval_at:
        x = make_vertex(x, f.k)
        mass = radial_mass(g, x)
        if mass != 0:
            raise NotSolvable(
                f"tree wave equation unsolvable at vertex {x}: "
                f"radialized velocity has total mass {mass}",
                detail=(x, mass),
            )
        out[x] = ftable.apply(f, x) + gtable.apply(g, x)
    return TreeFunction(f.k, out)
