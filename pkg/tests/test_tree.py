"""k-regular tree: geometry, spherical means, weight tables, solvers."""

import random
from fractions import Fraction

import pytest

from lattice_waves import oracles, randgen, tree
from lattice_waves.errors import IndexOutOfRange, NotSolvable, ShapeMismatch


class TestGeometry:
    def test_make_vertex_validation(self):
        assert tree.make_vertex([1, 2, 1], 3) == (1, 2, 1)
        with pytest.raises(ShapeMismatch):
            tree.make_vertex([1, 1], 3)
        with pytest.raises(ShapeMismatch):
            tree.make_vertex([4], 3)

    def test_distance_common_prefix(self):
        assert tree.tree_distance((1, 2, 3), (1, 2, 1)) == 2
        assert tree.tree_distance((), (1, 2)) == 2
        assert tree.tree_distance((1,), (1,)) == 0

    def test_neighbors_degree_k(self):
        for k in (2, 3, 5):
            assert len(tree.neighbors(tree.ROOT, k)) == k
            assert len(tree.neighbors((1, 2), k)) == k
            assert (1,) in tree.neighbors((1, 2), k)

    def test_sphere_sizes(self):
        assert tree.sphere_size(3, 0) == 1
        assert [tree.sphere_size(3, r) for r in (1, 2, 3)] == [3, 6, 12]
        with pytest.raises(IndexOutOfRange):
            tree.sphere_size(3, -1)

    def test_sphere_size_counts_vertices(self):
        k, r = 3, 3
        count = sum(
            1
            for x in _ball_vertices(k, r)
            if tree.tree_distance(tree.ROOT, x) == r
        )
        assert count == tree.sphere_size(k, r)


def _ball_vertices(k, radius):
    out = [tree.ROOT]
    frontier = [tree.ROOT]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in tree.neighbors(x, k):
                if len(y) > len(x):
                    nxt.append(y)
        out += nxt
        frontier = nxt
    return out


class TestSphericalMeans:
    def test_even_in_r(self):
        f = tree.TreeFunction(3, {(1, 2): Fraction(2), (): Fraction(1)})
        assert tree.spherical_mean(f, (1,), -1) == tree.spherical_mean(f, (1,), 1)

    def test_path_reduce_profile(self):
        f = tree.TreeFunction(3, {(): Fraction(1), (1,): Fraction(3)})
        prof = tree.path_reduce(f, tree.ROOT)
        assert prof == [Fraction(1), Fraction(1)]  # 3 spread over a 3-sphere

    def test_radial_mass(self):
        g = tree.TreeFunction(3, {(): Fraction(1), (1,): Fraction(-3, 2)})
        # M(0) + 2*M(1) = 1 + 2*(-1/2) = 0
        assert tree.radial_mass(g, tree.ROOT) == 0


class TestAlpha:
    def test_small_values(self):
        # j-th power of the radialized symbol; j=1 is the symbol itself.
        assert tree.alpha_coeff(1, 0, 3) == 3
        assert tree.alpha_coeff(1, 1, 3) == -1
        assert tree.alpha_coeff(1, -1, 3) == -2
        assert tree.alpha_coeff(2, 0, 3) == 13

    def test_symmetry(self):
        for k in (2, 3, 4):
            for j in range(6):
                for s in range(j + 1):
                    assert tree.alpha_coeff(j, -s, k) == (k - 1) ** s * tree.alpha_coeff(
                        j, s, k
                    )

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            tree.alpha_coeff(2, 3, 3)


class TestWeights:
    def test_heat_n0_n1(self):
        assert tree.tree_heat_weights(3, 0).weights == [Fraction(1)]
        assert tree.tree_heat_weights(3, 1).weights == [Fraction(-2), Fraction(1)]

    def test_heat_n2_k3_matches_direct_stepping(self):
        # Two steps from a delta: 7 at the center, -4 on the 1-sphere
        # (sum -12 over 3 vertices), 1 on the 2-sphere.
        w = tree.tree_heat_weights(3, 2).weights
        assert w == [Fraction(7), Fraction(-4), Fraction(1)]

    def test_heat_weights_reproduce_kernel_values(self):
        for k in (2, 3, 4):
            for n in range(5):
                table = tree.tree_heat_weights(k, n)
                u = tree.TreeFunction(k, {tree.ROOT: Fraction(1)})
                for _ in range(n):
                    u = oracles.tree_step_heat(u)
                for s in range(n + 1):
                    x = tuple((1, 2) * s)[:s] if s else tree.ROOT
                    assert table.weights[s] == u(x)

    def test_wave_tables_shapes(self):
        wf, wg = tree.tree_wave_weights(3, 0)
        assert wf.weights == [Fraction(1)] and wg.weights == []
        wf, wg = tree.tree_wave_weights(3, 7)
        assert len(wf.weights) == 7 // 2 + 1
        assert len(wg.weights) == 6 // 2 + 1

    def test_wave_n2_examples(self):
        wf, wg = tree.tree_wave_weights(4, 2)
        assert wf.weights == [Fraction(-3), Fraction(1)]
        assert wg.weights == [Fraction(2)]

    def test_normalizations(self):
        for k in (2, 3, 5):
            for n in range(9):
                heat = tree.tree_heat_weights(k, n)
                wf, wg = tree.tree_wave_weights(k, n)
                for table, target in ((heat, 1), (wf, 1), (wg, n)):
                    total = sum(
                        (w * tree.sphere_size(k, s) for s, w in enumerate(table.weights)),
                        Fraction(0),
                    )
                    assert total == target


class TestSolvers:
    def test_heat_one_step_example(self):
        f = tree.TreeFunction(3, {tree.ROOT: Fraction(1)})
        u = tree.tree_heat_solve(f, 1, [tree.ROOT, (1,)])
        assert u(tree.ROOT) == -2
        assert u((1,)) == 1

    def test_heat_matches_stepping_at_noncentral_vertices(self):
        rng = random.Random(2)
        for k in (2, 3):
            f = randgen.random_tree_function(rng, k)
            eval_at = [tree.ROOT] + sorted(f.support())[:2]
            u = f
            for n in range(7):
                closed = tree.tree_heat_solve(f, n, eval_at)
                for x in eval_at:
                    assert closed(x) == u(x)
                u = oracles.tree_step_heat(u)

    def test_wave_solvability_is_per_vertex(self):
        k = 3
        g = tree.TreeFunction(k, {tree.ROOT: Fraction(1), (1,): Fraction(-3, 2)})
        f = tree.TreeFunction(k, {})
        # Radialized mass vanishes around the root but not around (2,).
        assert tree.radial_mass(g, tree.ROOT) == 0
        assert tree.radial_mass(g, (2,)) != 0
        u = tree.tree_wave_solve(f, g, 3, [tree.ROOT])
        assert u(tree.ROOT) is not None
        with pytest.raises(NotSolvable):
            tree.tree_wave_solve(f, g, 3, [(2,)])

    def test_wave_matches_stepping(self):
        k = 3
        rng = random.Random(4)
        f = randgen.random_tree_function(rng, k, max_radius=2, max_points=3)
        g0 = randgen.random_tree_function(rng, k, max_radius=2, max_points=3)
        x = tree.ROOT
        g = tree.TreeFunction(
            k, {**g0.entries, x: g0(x) - tree.radial_mass(g0, x)}
        )
        u_prev = f
        u_curr = tree.TreeFunction(k, {y: f(y) + g(y) for y in f.support() | g.support()})
        for n in range(7):
            want = u_prev if n == 0 else u_curr
            assert tree.tree_wave_solve(f, g, n, [x])(x) == want(x)
            if n >= 1:
                u_prev, u_curr = u_curr, oracles.tree_step_wave(u_prev, u_curr)

    def test_mismatched_degree_rejected(self):
        with pytest.raises(ShapeMismatch):
            tree.tree_wave_solve(
                tree.TreeFunction(3, {}), tree.TreeFunction(4, {}), 1, [tree.ROOT]
            )


class TestK2Degeneration:
    def test_heat_weights_match_z_kernel(self):
        from lattice_waves import cayley
        from lattice_waves.groups import make_element, make_group, validate_generators

        Z = make_group(1, [])
        S = validate_generators(
            Z, [make_element(Z, [1], []), make_element(Z, [-1], [])]
        )
        for n in range(8):
            K = cayley.heat_kernel(Z, S, n).data
            w = tree.tree_heat_weights(2, n).weights
            assert w[0] == K(make_element(Z, [0], []))
            for s in range(1, n + 1):
                assert w[s] == K(make_element(Z, [s], []))
