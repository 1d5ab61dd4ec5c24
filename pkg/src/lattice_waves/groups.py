"""Finitely generated discrete abelian groups Z^rank x Z_m1 x ... x Z_mt.

Elements are integer tuples (free part, torsion part), with torsion
coordinates always stored reduced mod m_i so that equality is plain
componentwise comparison.  Every operation here is a pure function of
immutable values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .errors import (
    ContainsIdentity,
    DoesNotGenerate,
    InfiniteSubgroup,
    ModulusOutOfRange,
    NotSymmetric,
    ShapeMismatch,
)


@dataclass(frozen=True)
class GroupSpec:
    """Signature of the group Z^rank x Z_{m_1} x ... x Z_{m_t}."""

    rank: int
    moduli: tuple[int, ...]

    @property
    def is_finite(self) -> bool:
        return self.rank == 0


@dataclass(frozen=True)
class GroupElement:
    """A group element as a pair of integer tuples, torsion reduced mod m_i."""

    free: tuple[int, ...]
    torsion: tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    """A validated symmetric generating set; ``degree`` is the Cayley-graph degree."""

    elements: tuple[GroupElement, ...]
    degree: int


def make_group(rank: int, moduli: Iterable[int]) -> GroupSpec:
    moduli = tuple(int(m) for m in moduli)
    if rank < 0:
        raise ModulusOutOfRange(f"rank must be non-negative, got {rank}")
    for m in moduli:
        if m < 2:
            raise ModulusOutOfRange(f"torsion modulus must be >= 2, got {m}")
    return GroupSpec(int(rank), moduli)


def make_element(G: GroupSpec, free: Sequence[int], torsion: Sequence[int]) -> GroupElement:
    """Build a canonical element, reducing torsion coordinates eagerly."""
    free = tuple(int(v) for v in free)
    torsion = tuple(int(v) for v in torsion)
    if len(free) != G.rank or len(torsion) != len(G.moduli):
        raise ShapeMismatch(
            f"element shape ({len(free)},{len(torsion)}) does not match "
            f"group shape ({G.rank},{len(G.moduli)})"
        )
    return GroupElement(free, tuple(v % m for v, m in zip(torsion, G.moduli)))


def identity(G: GroupSpec) -> GroupElement:
    return GroupElement((0,) * G.rank, (0,) * len(G.moduli))


def conforms(G: GroupSpec, a: GroupElement) -> bool:
    return (
        len(a.free) == G.rank
        and len(a.torsion) == len(G.moduli)
        and all(0 <= v < m for v, m in zip(a.torsion, G.moduli))
    )


def _check_shape(G: GroupSpec, *elems: GroupElement) -> None:
    for a in elems:
        if len(a.free) != G.rank or len(a.torsion) != len(G.moduli):
            raise ShapeMismatch("element does not conform to the group signature")


def elem_add(G: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    _check_shape(G, a, b)
    free = tuple(x + y for x, y in zip(a.free, b.free))
    torsion = tuple((x + y) % m for x, y, m in zip(a.torsion, b.torsion, G.moduli))
    return GroupElement(free, torsion)


def elem_neg(G: GroupSpec, a: GroupElement) -> GroupElement:
    _check_shape(G, a)
    free = tuple(-x for x in a.free)
    torsion = tuple((-x) % m for x, m in zip(a.torsion, G.moduli))
    return GroupElement(free, torsion)


def elem_sub(G: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    return elem_add(G, a, elem_neg(G, b))


def _relation_rows(G: GroupSpec) -> list[list[int]]:
    """Rows m_i * e_i on the torsion coordinates (within the full coordinate space)."""
    t = len(G.moduli)
    rows = []
    for i, m in enumerate(G.moduli):
        row = [0] * (G.rank + t)
        row[G.rank + i] = m
        rows.append(row)
    return rows


def validate_generators(G: GroupSpec, S: Sequence[GroupElement]) -> GeneratorSet:
    """Check that S is a symmetric generating set excluding the identity.

    Generation is decided by the Smith Normal Form of the lattice spanned
    by the generators together with the torsion relations: S generates the
    group iff every invariant factor equals 1.
    """
    if not S:
        raise DoesNotGenerate("empty generating set")
    elems = tuple(make_element(G, s.free, s.torsion) for s in S)
    if len(set(elems)) != len(elems):
        raise NotSymmetric("generating set contains repeated elements")
    e = identity(G)
    if e in elems:
        raise ContainsIdentity("generating set contains the identity")
    elem_set = set(elems)
    for s in elems:
        if elem_neg(G, s) not in elem_set:
            raise NotSymmetric(f"generating set is missing the inverse of {s}")
    dim = G.rank + len(G.moduli)
    if dim > 0:
        rows = [list(s.free) + list(s.torsion) for s in elems]
        rows += _relation_rows(G)
        factors = invariant_factors(Matrix(rows))
        nonzero = [abs(int(d)) for d in factors if d != 0]
        if len(nonzero) < dim or any(d != 1 for d in nonzero):
            raise DoesNotGenerate(
                f"generators span a proper subgroup (invariant factors {factors})"
            )
    return GeneratorSet(elems, len(elems))


@dataclass(frozen=True)
class Quotient:
    """The quotient of a group by a finite subgroup H of its torsion part.

    ``project`` is a surjective homomorphism onto ``group`` with kernel
    exactly H; ``section`` picks the canonical representative of each
    coset; ``subgroup`` lists the elements of H; ``order`` is |H|.
    """

    base: GroupSpec
    group: GroupSpec
    order: int
    subgroup: tuple[GroupElement, ...]
    _transform: tuple[tuple[int, ...], ...]
    _inverse_transform: tuple[tuple[int, ...], ...]
    _divisors: tuple[int, ...]
    _kept: tuple[int, ...]

    def project(self, a: GroupElement) -> GroupElement:
        _check_shape(self.base, a)
        t = len(self.base.moduli)
        if t == 0:
            return a
        y = [sum(a.torsion[i] * self._transform[i][j] for i in range(t)) for j in range(t)]
        torsion = tuple(y[j] % self._divisors[j] for j in self._kept)
        return GroupElement(a.free, torsion)

    def section(self, q: GroupElement) -> GroupElement:
        """Canonical representative in the base group of the coset q."""
        _check_shape(self.group, q)
        t = len(self.base.moduli)
        if t == 0:
            return q
        w = [0] * t
        for coord, j in zip(q.torsion, self._kept):
            w[j] = coord
        x = [sum(w[j] * self._inverse_transform[j][i] for j in range(t)) for i in range(t)]
        return make_element(self.base, q.free, x)

    def fiber(self, q: GroupElement) -> tuple[GroupElement, ...]:
        """All |H| base-group representatives of the coset q."""
        rep = self.section(q)
        return tuple(elem_add(self.base, rep, h) for h in self.subgroup)


def quotient(G: GroupSpec, H_gens: Sequence[GroupElement]) -> Quotient:
    """Quotient of G by the finite subgroup generated by torsion-only elements.

    Computed via the Smith Normal Form of the torsion relation matrix
    extended by the subgroup generators.
    """
    gens = [make_element(G, h.free, h.torsion) for h in H_gens]
    for h in gens:
        if any(v != 0 for v in h.free):
            raise InfiniteSubgroup(
                f"subgroup generator {h} has nonzero free part; the subgroup is infinite"
            )
    t = len(G.moduli)
    if t == 0:
        return Quotient(G, G, 1, (identity(G),), (), (), (), ())

    rows = [[0] * t for _ in range(t)]
    for i, m in enumerate(G.moduli):
        rows[i][i] = m
    rows += [list(h.torsion) for h in gens]
    dM = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(ZZ)
    S, _U, V = smith_normal_decomp(dM)
    Smat = S.to_Matrix()
    Vmat = V.to_Matrix()
    divisors = tuple(abs(int(Smat[i, i])) for i in range(t))
    kept = tuple(i for i, d in enumerate(divisors) if d >= 2)
    qspec = GroupSpec(G.rank, tuple(divisors[i] for i in kept))
    order = 1
    for m in G.moduli:
        order *= m
    for d in divisors:
        order //= d
    if order == 1:
        # Trivial subgroup: keep the original presentation and the identity map.
        ident = tuple(tuple(int(i == j) for j in range(t)) for i in range(t))
        return Quotient(G, G, 1, (identity(G),), ident, ident, G.moduli, tuple(range(t)))

    Vinv = Vmat.inv()
    transform = tuple(tuple(int(Vmat[i, j]) for j in range(t)) for i in range(t))
    inverse = tuple(tuple(int(Vinv[i, j]) for j in range(t)) for i in range(t))

    quot = Quotient(G, qspec, order, (), transform, inverse, divisors, kept)
    zero_free = (0,) * G.rank
    q_id = identity(qspec)
    subgroup = tuple(
        GroupElement(zero_free, tor)
        for tor in itertools.product(*(range(m) for m in G.moduli))
        if quot.project(GroupElement(zero_free, tor)) == q_id
    )
    if len(subgroup) != order:
        raise AssertionError(
            f"subgroup enumeration found {len(subgroup)} elements, expected {order}"
        )
    return Quotient(G, qspec, order, subgroup, transform, inverse, divisors, kept)


def group_elements(G: GroupSpec) -> Iterable[GroupElement]:
    """All elements of a finite group (rank must be 0)."""
    if G.rank != 0:
        raise ShapeMismatch("cannot enumerate an infinite group")
    for tor in itertools.product(*(range(m) for m in G.moduli)):
        yield GroupElement((), tor)


Projection = Callable[[GroupElement], GroupElement]
