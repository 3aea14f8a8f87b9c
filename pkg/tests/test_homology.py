import random

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from quandlehom import (
    Chain,
    HomologyGroup,
    Quandle,
    boundary_quandle,
    homology_group,
    is_null_homologous,
    matrix_of_boundary,
    quandle_basis,
)
from quandlehom.errors import DegenerateGeneratorError, DegreeError, NotACycleError

# frozen from an independent Smith-normal-form computation (sympy) over
# the same boundary matrices, done before this module was written
EXPECTED_R3 = {1: (1, ()), 2: (0, ()), 3: (0, (3,))}

EXPECTED_INVENTORY = {
    "R1": {1: (1, ()), 2: (0, ()), 3: (0, ())},
    "T2": {1: (2, ()), 2: (2, ()), 3: (2, ())},
    "T3": {1: (3, ()), 2: (6, ()), 3: (12, ())},
    "R3": {1: (1, ()), 2: (0, ()), 3: (0, (3,))},
    "R4": {1: (2, ()), 2: (2, (2, 2)), 3: (2, (2, 2, 2, 2))},
    "S4": {1: (1, ()), 2: (0, (2,)), 3: (0, (2, 4))},
}


def sympy_homology(q, degree):
    """Independent recomputation: sympy rank + Smith normal form."""
    dim = len(quandle_basis(q, degree))
    if degree == 1:
        rank_down = 0
    else:
        rank_down = Matrix(matrix_of_boundary(q, degree).to_rows()).rank()
    up = Matrix(matrix_of_boundary(q, degree + 1).to_rows())
    rank_up = up.rank()
    torsion = []
    if up.rows and up.cols:
        s = smith_normal_form(up)
        for i in range(min(s.rows, s.cols)):
            d = abs(int(s[i, i]))
            if d >= 2:
                torsion.append(d)
    return dim - rank_down - rank_up, tuple(sorted(torsion))


class TestHomologyGroupType:
    def test_validation(self):
        with pytest.raises(ValueError):
            HomologyGroup(-1, ())
        with pytest.raises(ValueError):
            HomologyGroup(0, (1,))
        with pytest.raises(ValueError):
            HomologyGroup(0, (4, 6))  # 4 does not divide 6

    def test_str_and_json(self):
        g = HomologyGroup(2, (2, 4))
        assert str(g) == "Z + Z + Z/2 + Z/4"
        assert str(HomologyGroup(0, ())) == "0"
        assert g.to_json_dict() == {"free_rank": 2, "torsion": [2, 4]}


class TestHomologyGroups:
    def test_r3_frozen_values(self, r3):
        for degree, (rank, torsion) in EXPECTED_R3.items():
            g = homology_group(r3, degree)
            assert (g.free_rank, g.torsion) == (rank, torsion), degree

    def test_inventory_frozen_values(self, inventory):
        by_name = dict(inventory)
        for name, expected in EXPECTED_INVENTORY.items():
            q = by_name[name]
            for degree, (rank, torsion) in expected.items():
                g = homology_group(q, degree)
                assert (g.free_rank, g.torsion) == (rank, torsion), (name, degree)

    def test_against_independent_sympy_recomputation(self, inventory):
        for name, q in inventory:
            for degree in (1, 2, 3):
                g = homology_group(q, degree)
                rank, torsion = sympy_homology(q, degree)
                assert g.free_rank == rank, (name, degree)
                assert tuple(sorted(g.torsion)) == torsion, (name, degree)

    def test_degree_must_be_positive(self, r3):
        with pytest.raises(DegreeError):
            homology_group(r3, 0)

    def test_invariant_under_quandle_relabeling(self, r3):
        def conjugate(q, sigma, inv):
            n = q.order
            return Quandle.from_table(
                [[sigma[q.table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]
            )

        # x -> x + 1 mod 3 is an automorphism, so conjugation returns the
        # identical table; invariance there is exact by construction
        shift = [1, 2, 0]
        unshift = [2, 0, 1]
        assert conjugate(r3, shift, unshift) == r3

        # a transposition is not an automorphism of the order-4 dihedral
        # quandle: the table genuinely changes but homology must not
        r4 = Quandle.dihedral(4)
        swap = [1, 0, 2, 3]
        relabeled = conjugate(r4, swap, swap)
        assert relabeled != r4
        for degree in (1, 2, 3):
            assert homology_group(relabeled, degree) == homology_group(r4, degree)


class TestIsNullHomologous:
    def test_cbar1_is_not_null_homologous(self, r3, cbar1):
        assert is_null_homologous(cbar1, r3) is False

    def test_zero_chain_bounds(self, r3):
        assert is_null_homologous(Chain.zero(3), r3) is True

    def test_boundaries_of_all_degree4_generators_bound(self, r3):
        for gen in quandle_basis(r3, 4):
            cycle = boundary_quandle(Chain.generator(gen), r3)
            assert is_null_homologous(cycle, r3) is True, gen

    def test_boundaries_of_random_degree4_chains_bound(self, r3):
        rng = random.Random(31)
        basis4 = quandle_basis(r3, 4)
        for _ in range(25):
            d = Chain(4, [(rng.choice(basis4), rng.randint(-5, 5)) for _ in range(5)])
            cycle = boundary_quandle(d, r3)
            assert is_null_homologous(cycle, r3) is True

    def test_verdict_is_sign_invariant(self, r3, cbar1):
        assert is_null_homologous(cbar1, r3) == is_null_homologous(-cbar1, r3)
        boundary = boundary_quandle(Chain.generator((0, 1, 0, 2)), r3)
        assert is_null_homologous(boundary, r3) == is_null_homologous(-boundary, r3)

    def test_non_cycle_is_an_error_not_false(self, r3):
        with pytest.raises(NotACycleError):
            is_null_homologous(Chain.generator((2, 0, 2)), r3)

    def test_degenerate_generator_rejected(self, r3):
        with pytest.raises(DegenerateGeneratorError):
            is_null_homologous(Chain.generator((1, 1, 2)), r3)

    def test_multiples_of_cbar1_detect_order_three_class(self, r3, cbar1):
        # the class generates Z/3, so exactly multiples of 3 bound
        assert is_null_homologous(2 * cbar1, r3) is False
        assert is_null_homologous(3 * cbar1, r3) is True
        assert is_null_homologous(6 * cbar1, r3) is True
