"""Unit tests for root-system data."""

import pytest

from models import LieQuiverError, LieQuiverErrorType, LieType, LinearForm, Weight
from services import (
    cartan_matrix, enumerate_extremal, eps, extremal_witness, h_form, h_value, is_extremal,
    is_regular, parse_psi, phi, positive_roots, psi_c, psi_from_json, root_system,
    weyl_dimension,
)

A2 = LieType("A", 2)
A3 = LieType("A", 3)
C2 = LieType("C", 2)
C3 = LieType("C", 3)


class TestRootSystem:
    """Test cases for Cartan matrices and positive roots."""

    def test_cartan_matrix_c2(self):
        """Test the C2 Cartan matrix puts -2 above the diagonal."""
        assert cartan_matrix(C2) == [[2, -2], [-1, 2]]

    def test_cartan_matrix_a3(self):
        """Test the A3 Cartan matrix is tridiagonal."""
        assert cartan_matrix(A3) == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]

    @pytest.mark.parametrize("family,rank,count", [
        ("A", 1, 1), ("A", 3, 6), ("A", 4, 10), ("C", 2, 4), ("C", 3, 9), ("C", 4, 16),
    ])
    def test_positive_root_count(self, family, rank, count):
        """Test A_l has l(l+1)/2 positive roots and C_l has l^2."""
        assert len(positive_roots(LieType(family, rank))) == count

    def test_c2_root_weights(self):
        """Test the weights of the long and short beta roots."""
        system = root_system(C2)

        assert system.root("b", 1, 1).weight == Weight((2, 0))
        assert system.root("b", 1, 2).weight == Weight((0, 1))
        assert system.root("b", 2, 2).weight == Weight((-2, 2))
        assert system.root("b", 1, 1).simple == (2, 1)

    def test_unknown_root(self):
        """Test asking for a label that is not a root."""
        with pytest.raises(LieQuiverError) as exc_info:
            root_system(C2).root("b", 2, 1)

        assert exc_info.value.error_type == LieQuiverErrorType.NOT_A_ROOT

    def test_above(self):
        """Test roots dominating beta_22 in C2."""
        system = root_system(C2)
        labels = [r.label for r in system.above(system.root("b", 2, 2))]

        assert labels == [("b", 1, 1), ("b", 1, 2), ("b", 2, 2)]


class TestRootStrings:
    """Test cases for epsilon and phi."""

    @pytest.mark.parametrize("lie_type,beta,expected", [
        (A2, (1, 0), (0, 1)),
        (A2, (1, 1), (0, 0)),
        (A3, (1, 1, 0), (0, 0, 1)),
        (C2, (2, 1), (0, 0)),
        (C2, (1, 1), (1, 0)),
        (C2, (0, 1), (2, 0)),
    ])
    def test_eps(self, lie_type, beta, expected):
        """Test string lengths above a root."""
        assert eps(lie_type, beta) == Weight(expected)

    def test_phi(self):
        """Test phi(beta) = epsilon(beta) + beta."""
        assert phi(C2, (0, 1)) == Weight((0, 2))

    def test_eps_not_a_root(self):
        """Test epsilon of a non-root."""
        with pytest.raises(LieQuiverError) as exc_info:
            eps(A2, (2, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.NOT_A_ROOT

    def test_eps_wrong_length(self):
        """Test epsilon with the wrong number of coordinates."""
        with pytest.raises(LieQuiverError) as exc_info:
            eps(A2, (1, 0, 0))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT


class TestWeylDimension:
    """Test cases for the Weyl dimension formula."""

    @pytest.mark.parametrize("lie_type,weight,dim", [
        (C2, (1, 0), 4),
        (C2, (0, 1), 5),
        (C2, (1, 1), 16),
        (A2, (1, 1), 8),
        (A2, (0, 0), 1),
    ])
    def test_dimension(self, lie_type, weight, dim):
        """Test known module dimensions."""
        assert weyl_dimension(lie_type, Weight(weight)) == dim

    def test_not_dominant(self):
        """Test a non-dominant weight is rejected."""
        with pytest.raises(LieQuiverError) as exc_info:
            weyl_dimension(A2, Weight((1, -1)))

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT


class TestExtremalSets:
    """Test cases for extremal sets."""

    def test_enumerate_a2(self):
        """Test A2 has five extremal sets."""
        assert len(enumerate_extremal(A2)) == 5

    @pytest.mark.parametrize("rank", [2, 3])
    def test_enumerate_c(self, rank):
        """Test C_n has one extremal set per nonempty index subset."""
        assert len(enumerate_extremal(LieType("C", rank))) == 2 ** rank - 1

    def test_non_extremal(self):
        """Test alpha_11 and alpha_22 do not form an extremal set."""
        system = root_system(A2)
        roots = [system.root("a", 1, 1), system.root("a", 2, 2)]

        assert not is_extremal(A2, roots)
        assert extremal_witness(A2, roots) is None

    def test_witness_separates(self):
        """Test the LP witness is maximal exactly on Psi(1,2)."""
        system = root_system(C2)
        psi = psi_c(C2, [1, 2])
        xi = extremal_witness(C2, psi)

        def value(simple):
            return sum(c * x for c, x in zip(simple, xi))

        top = {value(r.simple) for r in psi}
        assert len(top) == 1
        others = [r for r in system.positive_roots if r not in psi]
        assert all(value(r.simple) < min(top) for r in others)
        assert is_extremal(C2, psi)

    def test_search_cap(self):
        """Test the type A search refuses large ranks."""
        with pytest.raises(LieQuiverError) as exc_info:
            enumerate_extremal(LieType("A", 6))

        assert exc_info.value.error_type == LieQuiverErrorType.CAP_EXCEEDED


class TestPsiSets:
    """Test cases for building and parsing Psi."""

    def test_psi_c(self):
        """Test Psi(1,3) in C3."""
        psi = psi_c(C3, [3, 1])

        assert [r.label for r in psi] == [("b", 1, 1), ("b", 1, 3), ("b", 3, 3)]

    def test_psi_c_type_a(self):
        """Test Psi(i_1,...,i_k) only exists in type C."""
        with pytest.raises(LieQuiverError) as exc_info:
            psi_c(A2, [1])

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    def test_psi_c_out_of_range(self):
        """Test indices beyond the rank."""
        with pytest.raises(LieQuiverError) as exc_info:
            psi_c(C2, [3])

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    def test_parse_type_a(self):
        """Test the type A mini-grammar."""
        psi = parse_psi(LieType("A", 5), "a:1,3x3,5")

        assert [r.label for r in psi] == [("a", 1, 3), ("a", 3, 5)]

    def test_parse_type_c(self):
        """Test the type C shorthand."""
        assert parse_psi(C3, "1,3") == psi_c(C3, [1, 3])

    def test_parse_malformed(self):
        """Test malformed text."""
        with pytest.raises(LieQuiverError) as exc_info:
            parse_psi(A3, "a:1,x")

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    def test_parse_non_root(self):
        """Test a label that is not a root."""
        with pytest.raises(LieQuiverError) as exc_info:
            parse_psi(A3, "a:3,1")

        assert exc_info.value.error_type == LieQuiverErrorType.NOT_A_ROOT

    def test_json(self):
        """Test reading Psi back from its JSON form."""
        psi = parse_psi(LieType("A", 5), "a:1,3x1,5x3,3x3,5")

        assert psi_from_json(psi.to_dict()) == psi

    def test_json_invalid(self):
        """Test JSON without a rank."""
        with pytest.raises(LieQuiverError) as exc_info:
            psi_from_json({"family": "A", "roots": []})

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    @pytest.mark.parametrize("lie_type,text,regular", [
        (C3, "1,3", True),
        (C2, "1,2", False),
        (LieType("A", 5), "a:1,3x1,5x3,3x3,5", True),
        (LieType("A", 4), "a:1,2x1,3x2,2x2,3", False),
    ])
    def test_regularity(self, lie_type, text, regular):
        """Test regularity of several Psi."""
        assert is_regular(parse_psi(lie_type, text)) == regular


class TestHForms:
    """Test cases for the forms H_{r,s}."""

    def test_h_form(self):
        """Test H_{1,2} = h1 + h2 + 1."""
        assert h_form(3, 1, 2) == LinearForm((1, 1, 0), 1)
        assert str(h_form(3, 1, 2)) == "h1 + h2 + 1"

    def test_empty_range(self):
        """Test H_{r,s} vanishes for r > s."""
        assert h_form(3, 3, 2).is_zero()
        assert h_value(Weight((5, 5, 5)), 3, 2) == 0

    def test_h_value(self):
        """Test evaluation agrees with the form."""
        lam = Weight((1, 2, 3))

        assert h_value(lam, 2, 3) == 6
        assert h_form(3, 2, 3).evaluate(lam) == 6

    def test_out_of_range(self):
        """Test indices outside 1..l."""
        with pytest.raises(LieQuiverError) as exc_info:
            h_form(3, 0, 2)

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT
