"""Quandle homology groups over the integers and the null-homology test.

H_n is ker(d_n) / im(d_{n+1}) in the quandle complex; d_1 is the zero map.
Free rank and torsion come from Smith normal forms of the two boundary
matrices.  Null-homology of a cycle is decided directly as an integer
image-membership query, not by reducing against computed torsion.
"""

from dataclasses import dataclass

from .chains import boundary_quandle, coordinates, matrix_of_boundary, quandle_basis
from .errors import DegreeError, NotACycleError
from .intlinalg import snf, solve_in_image


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant
    factors d_i >= 2 with d_i | d_{i+1}."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion chain broken: {a} does not divide {b}")

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def homology_group(quandle, degree):
    """H_degree of the quandle complex with integer coefficients.

    >>> from quandlehom import Quandle
    >>> str(homology_group(Quandle.dihedral(3), 3))
    'Z/3'
    """
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise DegreeError(f"homology degree must be a positive integer, got {degree!r}")
    dim = len(quandle_basis(quandle, degree))
    if degree == 1:
        rank_down = 0
    else:
        rank_down = snf(matrix_of_boundary(quandle, degree)).rank
    up = snf(matrix_of_boundary(quandle, degree + 1))
    torsion = tuple(d for d in up.diagonal if d >= 2)
    return HomologyGroup(free_rank=dim - rank_down - up.rank, torsion=torsion)


def is_null_homologous(chain, quandle):
    """True iff the cycle bounds, i.e. lies in the image of d_{degree+1}
    of the quandle complex over the integers.

    Raises NotACycleError if the input is not a cycle: the two halves of
    the pseudo-cycle definition are kept separate on purpose.
    """
    vec = coordinates(chain, quandle)  # also rejects degenerate generators
    if chain.degree >= 2 and not boundary_quandle(chain, quandle).is_zero():
        raise NotACycleError(
            f"chain has nonzero quandle boundary: {boundary_quandle(chain, quandle)!r}"
        )
    return solve_in_image(matrix_of_boundary(quandle, chain.degree + 1), vec) is not None
