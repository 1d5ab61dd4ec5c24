"""Exception hierarchy shared by all solver modules."""


class LatticeWavesError(Exception):
    """Base class for all library errors."""

    code = "INTERNAL"


class ModulusOutOfRange(LatticeWavesError):
    """A torsion modulus smaller than 2 was supplied."""

    code = "MODULUS_OUT_OF_RANGE"


class ShapeMismatch(LatticeWavesError):
    """An element's coordinate vectors do not match the group signature."""

    code = "SHAPE_MISMATCH"


class GroupMismatch(LatticeWavesError):
    """Two functions or elements belong to different groups."""

    code = "GROUP_MISMATCH"


class ContainsIdentity(LatticeWavesError):
    """A generating set contains the identity element."""

    code = "CONTAINS_IDENTITY"


class NotSymmetric(LatticeWavesError):
    """A generating set is not closed under negation."""

    code = "NOT_SYMMETRIC"


class DoesNotGenerate(LatticeWavesError):
    """A candidate set fails to generate the whole group."""

    code = "DOES_NOT_GENERATE"


class InfiniteSubgroup(LatticeWavesError):
    """A subgroup generator has a nonzero free part, so the subgroup is infinite."""

    code = "INFINITE_SUBGROUP"


class SInsideH(LatticeWavesError):
    """A coset-graph generator lies inside the subgroup H."""

    code = "S_INSIDE_H"


class NotSolvable(LatticeWavesError):
    """The wave equation's zero-mean compatibility condition fails.

    ``detail`` carries the offending sum (and, for trees, the vertex at
    which the condition failed).
    """

    code = "NOT_SOLVABLE"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class TorsionUnsupported(LatticeWavesError):
    """A torsion-free diagnostic was invoked on a group with torsion."""

    code = "TORSION_UNSUPPORTED"


class CosetInconstant(LatticeWavesError):
    """A lifted function is not constant on the cosets of H."""

    code = "COSET_INCONSTANT"


class IndexOutOfRange(LatticeWavesError):
    """A coefficient index lies outside the valid range."""

    code = "INDEX_OUT_OF_RANGE"
