"""Unit tests for the closed-form relation spaces."""

from fractions import Fraction

import pytest

from models import LieQuiverError, LieQuiverErrorType, LieType, PathVec, Weight
from services import (
    QuiverService, family_relations, gamma_parameters, gamma_relations, h_value, is_generic,
    koszul_dual_space, n_eta, parse_psi, pi_closed_form, psi_c, relation_space, root_system,
    to_lattice, xi_parameters, xi_relations,
)
from services.linalg import same_span

A4 = LieType("A", 4)
A5 = LieType("A", 5)
A8 = LieType("A", 8)
A9 = LieType("A", 9)
C2 = LieType("C", 2)
C3 = LieType("C", 3)
C6 = LieType("C", 6)
C7 = LieType("C", 7)
C8 = LieType("C", 8)


def rows(space):
    return [[int(c) if c.denominator == 1 else c for c in row] for row in space.matrix()]


class TestTypeA:
    """Test cases for type A relations."""

    @pytest.fixture
    def regular(self):
        """The regular set {alpha_13, alpha_15, alpha_33, alpha_35} in A5."""
        return parse_psi(A5, "a:1,3x1,5x3,3x3,5")

    @pytest.fixture
    def crossing(self):
        """The non-regular set {alpha_12, alpha_13, alpha_22, alpha_23} in A4."""
        return parse_psi(A4, "a:1,2x1,3x2,2x2,3")

    def test_crossing_four_paths(self, regular):
        """Test two relations on four paths when H_{1,2} != H_{4,5}."""
        space = relation_space(regular, Weight((1, 1, 0, 2, 1)), (1, 1, 2, 1, 1))

        assert space.case == "crossing/t4"
        assert [p.labels[0].label for p in space.paths] == [
            ("a", 1, 3), ("a", 1, 5), ("a", 3, 3), ("a", 3, 5),
        ]
        assert rows(space) == [[24, 1, 0, -25], [15, 0, 1, -16]]
        assert space.generic

    def test_degenerate(self, regular):
        """Test the relations when H_{1,2} = H_{4,5}."""
        space = relation_space(regular, Weight((0, 1, 0, 1, 0)), (1, 1, 2, 1, 1))

        assert space.case == "crossing/t4-degenerate"
        assert space.generic is False

    def test_generic_off_locus(self, regular):
        """Test a weight off the non-generic hyperplane."""
        assert relation_space(regular, Weight((0, 1, 0, 1, 1)), (1, 1, 2, 1, 1)).generic

    def test_empty(self, regular):
        """Test a weight with no path of weight eta."""
        space = relation_space(regular, Weight((2, 0, 0, 3, 0)), (1, 1, 2, 1, 1))

        assert space.case == "empty"
        assert space.t == 0
        assert space.dimension == 0

    def test_n_eta(self, regular):
        """Test the affine form of the non-generic locus."""
        assert str(n_eta(regular, (1, 1, 2, 1, 1))) == "h1 + h2 - h4 - h5"

    @pytest.mark.parametrize("lam", [(0, 1, 0, 1, 0), (0, 1, 0, 1, 1), (1, 1, 0, 2, 1), (2, 1, 1, 1, 1)])
    def test_generic_matches_n_eta(self, regular, lam):
        """Test genericity agrees with the sign of N_eta."""
        eta = (1, 1, 2, 1, 1)
        space = relation_space(regular, Weight(lam), eta)
        form = n_eta(regular, eta)

        assert space.generic == (form is None or form.evaluate(Weight(lam)) != 0)

    def test_crossing_non_regular(self, crossing):
        """Test the crossing case for a non-regular Psi."""
        space = relation_space(crossing, Weight((1, 0, 2, 1)), (1, 2, 1, 0))

        assert space.case == "crossing/t4"
        assert rows(space) == [[8, 1, 0, -9], [3, 0, 1, -4]]

    @pytest.mark.parametrize("lam", [(1, 1, 1, 1), (1, 2, 1, 1)])
    def test_crossing_degenerate_rows(self, crossing, lam):
        """Test the degenerate rows when H_{1,1} = H_{3,3}."""
        space = relation_space(crossing, Weight(lam), (1, 2, 1, 0))

        assert space.case == "crossing/t4-degenerate"
        assert rows(space) == [[1, 0, 0, -1], [2, 1, -3, 0]]

    def test_crossing_two_paths(self, crossing):
        """Test the two-path crossing case."""
        space = relation_space(crossing, Weight((2, 1, 0, 1)), (1, 2, 1, 0))

        assert space.case == "crossing/t2"
        assert space.dimension == 1

    def test_crossing_empty(self, crossing):
        """Test no path."""
        assert relation_space(crossing, Weight((0, 1, 1, 0)), (1, 2, 1, 0)).case == "empty"

    def test_n_eta_not_regular(self, crossing):
        """Test N_eta needs a regular Psi."""
        with pytest.raises(LieQuiverError) as exc_info:
            n_eta(crossing, (1, 2, 1, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.NOT_REGULAR


class TestTypeC:
    """Test cases for type C relations."""

    @pytest.fixture
    def psi(self):
        """Psi(1,2) in C2."""
        return psi_c(C2, [1, 2])

    def test_diag_first(self, psi):
        """Test beta_11 + beta_12 with one and two paths."""
        single = relation_space(psi, Weight((0, 3)), (3, 2))
        double = relation_space(psi, Weight((1, 0)), (3, 2))

        assert single.case == "diag-first/t1"
        assert rows(single) == [[1]]
        assert double.case == "diag-first/t2"
        assert rows(double) == [[1, -1]]

    @pytest.mark.parametrize("lam,case,expected", [
        ((0, 0), "doubled-root/t1", []),
        ((1, 0), "doubled-root/t2", [[1, 2]]),
        ((2, 0), "doubled-root/t3", [[4, 3, -16]]),
        ((2, 3), "doubled-root/t3", [[4, 3, -16]]),
        ((4, 0), "doubled-root/t3", [[16, 5, -36]]),
    ])
    def test_doubled_root(self, psi, lam, case, expected):
        """Test 2 beta_12 = beta_11 + beta_22."""
        space = relation_space(psi, Weight(lam), (2, 2))

        assert space.case == case
        assert rows(space) == expected

    def test_doubled_root_paths(self, psi):
        """Test the three paths are ordered b11, b12, b22."""
        space = relation_space(psi, Weight((2, 0)), (2, 2))

        assert [p.labels[0].label for p in space.paths] == [("b", 1, 1), ("b", 1, 2), ("b", 2, 2)]

    @pytest.mark.parametrize("lam,case,t", [((0, 0), "empty", 0), ((1, 2), "empty", 0), ((2, 0), "diag-last/t1", 1)])
    def test_diag_last(self, psi, lam, case, t):
        """Test beta_12 + beta_22."""
        space = relation_space(psi, Weight(lam), (1, 2))

        assert space.case == case
        assert space.t == t
        if t:
            assert rows(space) == [[1]]

    def test_doubled_root_rank_three(self):
        """Test the doubled root of Psi(1,3) in C3."""
        psi = psi_c(LieType("C", 3), [1, 3])
        space = relation_space(psi, Weight((0, 2, 0)), (2, 2, 2))

        assert space.case == "doubled-root/t3"
        assert rows(space) == [[9, 4, -25]]
        assert n_eta(psi, (2, 2, 2)) is None

    @pytest.mark.parametrize("lam,generic", [((0, 2, 0, 1, 0), False), ((0, 2, 0, 2, 0), True)])
    def test_triple_middle(self, lam, generic):
        """Test beta_13 + beta_35 = beta_15 + beta_33 in C5."""
        psi = psi_c(LieType("C", 5), [1, 3, 5])
        eta = (1, 1, 3, 3, 2)
        space = relation_space(psi, Weight(lam), eta)

        assert space.case == "triple-middle/t4"
        assert space.generic is generic
        assert (n_eta(psi, eta).evaluate(Weight(lam)) != 0) is generic

    @pytest.mark.parametrize("lam,generic", [((0, 1, 0, 1, 0, 1, 0), False), ((0, 1, 0, 1, 1, 1, 0), True)])
    def test_quadruple(self, lam, generic):
        """Test the six-path case of Psi(1,3,5,7) in C7."""
        psi = psi_c(LieType("C", 7), [1, 3, 5, 7])
        space = relation_space(psi, Weight(lam), (1, 1, 2, 2, 3, 3, 2))

        assert space.case == "quadruple/t6"
        assert space.dimension == 3
        assert space.generic is generic

    def test_not_a_sum(self, psi):
        """Test eta outside Psi + Psi."""
        with pytest.raises(LieQuiverError) as exc_info:
            relation_space(psi, Weight((0, 0)), (1, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT


class TestRawCoordinates:
    """Test cases for raw Pi coordinates."""

    def test_raw_scales_by_norms(self):
        """Test raw coordinates are the normalised ones times Z(bottom) Z(top)."""
        psi = parse_psi(A5, "a:1,3x1,5x3,3x3,5")
        lam = Weight((1, 1, 0, 2, 1))
        eta = (1, 1, 2, 1, 1)
        normal = relation_space(psi, lam, eta)
        raw = relation_space(psi, lam, eta, normalize=False)

        assert raw.case == normal.case
        assert raw.matrix()[0][0] != 0
        assert raw.matrix()[0][2] == 0
        assert len(raw.basis) == 2


class TestClosedFormPi:
    """Test cases for Pi vectors from the adapted families."""

    @pytest.fixture
    def psi(self):
        """Psi(1,2) in C2."""
        return psi_c(C2, [1, 2])

    def test_symmetrized_relation_vanishes(self, psi):
        """Test the relation kills the symmetrised Pi vectors."""
        lam = Weight((2, 0))
        space = relation_space(psi, lam, (2, 2), normalize=False)
        paths = QuiverService(psi).paths2(lam, (2, 2))
        total = {}
        for path, c in zip(paths, space.basis[0].coeffs):
            bottom, top = path.labels
            for key, v in pi_closed_form(psi, lam, bottom, top).symmetrized().items():
                total[key] = total.get(key, 0) + c * v

        assert not any(total.values())

    def test_wrong_root_kind(self, psi):
        """Test an alpha root in type C."""
        alpha = root_system(C2).root("a", 1, 1)
        beta = root_system(C2).root("b", 1, 1)

        with pytest.raises(LieQuiverError) as exc_info:
            pi_closed_form(psi, Weight((2, 0)), alpha, beta)

        assert exc_info.value.error_type == LieQuiverErrorType.UNSUPPORTED_CASE

    def test_no_path(self, psi):
        """Test a missing first arrow."""
        system = root_system(C2)

        with pytest.raises(LieQuiverError) as exc_info:
            pi_closed_form(psi, Weight((0, 0)), system.root("b", 1, 2), system.root("b", 1, 2))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    def test_type_a_correction_term(self):
        """Test Pi(alpha_35, alpha_13) at H_{1,2} = 3, H_{4,5} = 4 has the term -1/5 e_15 (x) e_33."""
        psi = parse_psi(A5, "a:1,3x1,5x3,3x3,5")
        system = root_system(A5)
        lam = Weight((1, 1, 0, 1, 2))

        vec = pi_closed_form(psi, lam, system.root("a", 3, 5), system.root("a", 1, 3))

        assert (h_value(lam, 1, 2), h_value(lam, 4, 5)) == (3, 4)
        assert vec.terms == {
            (("a", 1, 3), ("a", 3, 5)): Fraction(1),
            (("a", 1, 5), ("a", 3, 3)): Fraction(-1, 5),
        }

    def test_maximal_top(self):
        """Test a maximal second root gives the single term e_top (x) e_bottom."""
        psi = parse_psi(A5, "a:1,3x1,5x3,3x3,5")
        system = root_system(A5)

        vec = pi_closed_form(psi, Weight((1, 1, 0, 1, 2)), system.root("a", 3, 3), system.root("a", 1, 5))

        assert vec.terms == {(("a", 1, 5), ("a", 3, 3)): Fraction(1)}


class TestGenericity:
    """Test cases for the coordinate-subspace genericity test."""

    @pytest.fixture
    def paths(self):
        """Four paths at (1,0,2,1) for the crossing set in A4."""
        psi = parse_psi(A4, "a:1,2x1,3x2,2x2,3")
        return tuple(QuiverService(psi).paths2(Weight((1, 0, 2, 1)), (1, 2, 1, 0)))

    def test_generic_line(self, paths):
        """Test a vector with full support is generic."""
        assert is_generic([PathVec(paths, (1, 1, 1, 1))], 4)

    def test_coordinate_line(self, paths):
        """Test a vector on one coordinate is not generic in four dimensions."""
        assert not is_generic([PathVec(paths, (1, 0, 0, 0))], 4)

    def test_empty(self):
        """Test the zero space is generic."""
        assert is_generic([], 3)

    def test_dependent(self, paths):
        """Test dependent vectors are rejected."""
        with pytest.raises(LieQuiverError) as exc_info:
            is_generic([PathVec(paths, (1, 1, 1, 1)), PathVec(paths, (2, 2, 2, 2))], 4)

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT


class TestKoszulDual:
    """Test cases for the orthogonal complement."""

    def test_complement(self):
        """Test the dual relations are orthogonal to the relations."""
        psi = psi_c(C2, [1, 2])
        space = relation_space(psi, Weight((2, 0)), (2, 2))
        dual = koszul_dual_space(space)

        assert len(dual) == 2
        for vec in dual:
            assert vec.dot(space.basis[0]) == Fraction(0)

    def test_empty(self):
        """Test no paths gives no dual relations."""
        psi = psi_c(C2, [1, 2])

        assert koszul_dual_space(relation_space(psi, Weight((0, 0)), (1, 2))) == []


def lattice_rows(vectors, paths):
    lookups = [dict(zip(v.paths, v.coeffs)) for v in vectors]
    return [[lookup.get(p, Fraction(0)) for p in paths] for lookup in lookups]


def compare_component(psi, lam, window):
    """Check lattice relations against translated closed forms on the component of lam; return the cases seen."""
    quiver = QuiverService(psi)
    system = root_system(psi.lie_type)
    vertices = quiver.component(lam, window)
    if psi.lie_type.family == "A":
        gamma = gamma_parameters(psi, lam)
        translate = quiver.signature_coords_a

        def relations_at(mu):
            return gamma_relations(gamma, *translate(mu))
    else:
        xi = xi_parameters(psi, lam)
        translate = quiver.signature_coords_c

        def relations_at(mu):
            return xi_relations(xi, translate(mu))

    cases = []
    for mu in sorted(vertices, key=lambda w: w.coords):
        lattice = relations_at(mu)
        for eta in quiver.sums():
            top = mu + system.weight_of(eta)
            if top not in vertices:
                continue
            space = relation_space(psi, mu, eta)
            found = [v for v in lattice if v.source == translate(top)]
            cases.append(space.case)
            assert len(found) == space.dimension, (mu, eta, space.case)
            if not found:
                continue
            closed = [to_lattice(psi, v) for v in space.basis]
            paths = closed[0].paths
            assert set(found[0].paths) == set(paths)
            assert same_span(lattice_rows(found, paths), lattice_rows(closed, paths)), (mu, eta, space.case)
    return cases


class TestLatticeParameters:
    """Test cases for the component parameters of the lattice families."""

    def test_gamma_shifts(self):
        """Test z-minus and z-plus and the H-values they give at lam."""
        psi = parse_psi(A9, "a:2,6x2,9x5,6x5,9")
        lam = Weight((1, 2, 3, 1, 1, 2, 1, 4, 1))
        params = gamma_parameters(psi, lam)
        x, y = QuiverService(psi).signature_coords_a(lam)

        assert params.m == (3, 2)
        assert params.n[0] == 3
        assert params.a == 0
        assert params.z_minus == (5,)
        assert params.z_plus == (6,)
        assert params.h_minus(x, 0, 1) == h_value(lam, 2, 4)
        assert params.h_plus(y, 0, 1) == h_value(lam, 7, 9)

    def test_xi_zeta(self):
        """Test zeta between consecutive indices and the H-values it gives at lam."""
        psi = psi_c(C7, [1, 4, 7])
        lam = Weight((2, 3, 2, 2, 5, 2, 2))
        params = xi_parameters(psi, lam)
        x = QuiverService(psi).signature_coords_c(lam)

        assert params.zeta == (5, 7)
        assert params.m[1:] == (4, 4)
        assert params.h_value(x, 0, 1) == h_value(lam, 1, 3)
        assert params.h_value(x, 1, 2) == h_value(lam, 4, 6)
        assert params.h_value(x, 0, 2) == h_value(lam, 1, 6)

    def test_not_product_shaped(self):
        """Test a set with i_r = j_1 has no Gamma parameters."""
        psi = parse_psi(A5, "a:1,3x1,5x3,3x3,5")

        with pytest.raises(LieQuiverError) as exc_info:
            gamma_parameters(psi, Weight((1, 1, 0, 2, 1)))

        assert exc_info.value.error_type == LieQuiverErrorType.UNSUPPORTED_CASE


class TestGammaRelations:
    """Test cases for relations on Gamma_a(m, n)."""

    @pytest.fixture
    def psi(self):
        """{alpha_25, alpha_27, alpha_45, alpha_47} in A8."""
        return parse_psi(A8, "a:2,5x2,7x4,5x4,7")

    @pytest.fixture
    def eta(self):
        """alpha_25 + alpha_47 in simple coordinates."""
        system = root_system(A8)
        return tuple(a + b for a, b in zip(system.root("a", 2, 5).simple, system.root("a", 4, 7).simple))

    def crossing(self, psi, lam, eta):
        quiver = QuiverService(psi)
        top = quiver.signature_coords_a(lam + root_system(A8).weight_of(eta))
        found = [v for v in gamma_relations(gamma_parameters(psi, lam), *quiver.signature_coords_a(lam))
                 if v.source == top]
        closed = [to_lattice(psi, v) for v in relation_space(psi, lam, eta).basis]
        return found, closed

    def test_commutativity(self, psi):
        """Test the relation for one first index and two second indices."""
        lam = Weight((2, 0, 1, 1, 1, 1, 1, 1))
        params = gamma_parameters(psi, lam)
        found = [v for v in gamma_relations(params, (0, 1), (1, 1)) if v.source == ((2, 1), (2, 2))]

        assert len(found) == 1
        assert [p.labels for p in found[0].paths] == [((0, 0), (0, 1)), ((0, 1), (0, 0))]
        assert found[0].paths[0].vertices[1] == ((1, 1), (2, 1))
        assert found[0].coeffs == (1, -1)

    def test_crossing_generic(self, psi, eta):
        """Test the crossing rows when M != N match the closed form."""
        lam = Weight((1, 2, 1, 1, 1, 1, 1, 1))
        found, closed = self.crossing(psi, lam, eta)

        assert relation_space(psi, lam, eta).case == "crossing/t4"
        assert len(found) == 2
        assert same_span(lattice_rows(found, closed[0].paths), lattice_rows(closed, closed[0].paths))

    def test_crossing_degenerate(self, psi, eta):
        """Test the crossing rows when M = N match the closed form."""
        lam = Weight((1, 1, 1, 1, 1, 1, 1, 1))
        params = gamma_parameters(psi, lam)
        x, y = QuiverService(psi).signature_coords_a(lam)
        found, closed = self.crossing(psi, lam, eta)

        assert params.h_minus(x, 0, 1) == params.h_plus(y, 0, 1) == 3
        assert relation_space(psi, lam, eta).case == "crossing/t4-degenerate"
        assert same_span(lattice_rows(found, closed[0].paths), lattice_rows(closed, closed[0].paths))

    def test_not_a_vertex(self, psi):
        """Test a point off the hyperplane |x| = |y| + a."""
        params = gamma_parameters(psi, Weight((1, 1, 1, 1, 1, 1, 1, 1)))

        with pytest.raises(LieQuiverError) as exc_info:
            gamma_relations(params, (1, 1), (0, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    @pytest.mark.slow
    @pytest.mark.parametrize("lam", [(1, 1, 1, 1, 1, 1, 1, 1), (1, 2, 1, 1, 1, 1, 1, 1), (0, 1, 2, 1, 1, 2, 0, 1)])
    def test_component_matches_closed_form(self, psi, lam):
        """Test every lattice relation on the component against the translated closed form."""
        cases = compare_component(psi, Weight(lam), Weight((10,) * 8))

        assert any(case.startswith("crossing") for case in cases)

    @pytest.mark.slow
    def test_component_reaches_degenerate(self, psi):
        """Test the component of (1,...,1) contains a vertex with M = N."""
        cases = compare_component(psi, Weight((1,) * 8), Weight((10,) * 8))

        assert "crossing/t4-degenerate" in cases
        assert "crossing/t4" in cases


class TestXiRelations:
    """Test cases for relations on Xi_a(m)."""

    def test_doubled_root(self):
        """Test the doubled-root row at x = (0, 0) for Psi(1,3)."""
        psi = psi_c(C3, [1, 3])
        params = xi_parameters(psi, Weight((1, 1, 1)))
        found = [v for v in xi_relations(params, (0, 0)) if v.source == (2, 2)]

        assert params.h_value((0, 0), 0, 1) == 3
        assert [p.labels[0] for p in found[0].paths] == [(0, 0), (0, 1), (1, 1)]
        assert found[0].coeffs == (9, 4, -25)

    def test_wrong_parity(self):
        """Test a point of the other parity."""
        params = xi_parameters(psi_c(C3, [1, 3]), Weight((1, 1, 1)))

        with pytest.raises(LieQuiverError) as exc_info:
            xi_relations(params, (1, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    @pytest.mark.slow
    @pytest.mark.parametrize("indices,lam", [
        ([2, 4, 6], (1, 1, 1, 1, 1, 1)),
        ([2, 4, 6], (2, 1, 0, 2, 1, 1)),
        ([2, 4, 6, 8], (1, 1, 1, 1, 1, 1, 1, 1)),
    ])
    def test_component_matches_closed_form(self, indices, lam):
        """Test every lattice relation on the component against the translated closed form."""
        lie_type = C6 if len(lam) == 6 else C8
        cases = compare_component(psi_c(lie_type, indices), Weight(lam), Weight((10,) * len(lam)))

        assert any(case.startswith("triple") for case in cases)
        if len(indices) == 4:
            assert "quadruple/t6" in cases


class TestFamilyRelations:
    """Test cases for relations on a whole component."""

    def test_window(self):
        """Test only relations with every vertex inside the window are kept."""
        psi = psi_c(C3, [1, 3])
        relations = family_relations(psi, Weight((1, 1, 1)), Weight((2, 2, 2)))

        assert len(relations) == 1
        assert relations[0].target == (0, 0)
        assert relations[0].source == (2, 2)

    def test_type_a_component(self):
        """Test the component of (1,...,1) carries both commutativity and crossing relations."""
        psi = parse_psi(A8, "a:2,5x2,7x4,5x4,7")
        relations = family_relations(psi, Weight((1,) * 8), Weight((10,) * 8))
        sizes = {len(v.paths) for v in relations}

        assert sizes == {2, 4}
