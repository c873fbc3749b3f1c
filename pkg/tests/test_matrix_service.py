from fractions import Fraction
import pytest
from hypothesis import given, settings as hsettings, strategies as st
from app.core.config import settings
from app.core.exception import InputException, QualitativeNotEvaluableException, ResourceLimitException
from app.models.matrix import Entry, EntryKind, QMatrix, normalize_index_set
from app.service.matrix_service import bareiss_determinant, matrix_service
from app.service.oracle_service import cofactor_determinant


def square_matrices(max_n: int = 4, lo: int = -3, hi: int = 3):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestEntries:

    def test_text_and_numeric_entries(self):
        m = QMatrix.of([["1/2", "-"], ["0", 3]])
        assert m.entry(0, 0) == Entry(EntryKind.FIXED, Fraction(1, 2))
        assert m.entry(0, 1).kind == EntryKind.NEGATIVE
        assert m.entry(1, 0).is_zero
        assert m.value(1, 1) == 3
        assert m.to_text() == [["1/2", "-"], ["0", "3"]]

    def test_zero_must_be_written_as_zero(self):
        with pytest.raises(InputException):
            QMatrix.of([["0.0"]])
        assert QMatrix.of([[0]]).entry(0, 0).is_zero

    def test_malformed_entries(self):
        with pytest.raises(InputException):
            QMatrix.of([["x"]])
        with pytest.raises(InputException):
            QMatrix.of([[True]])

    def test_ragged_and_empty_matrices(self):
        with pytest.raises(InputException):
            QMatrix.of([[1, 2], [3]])
        with pytest.raises(InputException):
            QMatrix.of([])

    def test_qualitative_value_not_evaluable(self):
        m = QMatrix.of([["+", 1], [0, 1]])
        with pytest.raises(QualitativeNotEvaluableException):
            m.values()
        with pytest.raises(QualitativeNotEvaluableException):
            matrix_service.determinant(m)

    def test_negation_keeps_kind(self):
        m = QMatrix.of([["+", "-3/2"], [0, "-"]])
        assert m.negated().to_text() == [["-", "3/2"], ["0", "+"]]

    def test_index_sets_are_sorted_and_checked(self):
        assert normalize_index_set([2, 0, 2], 3) == (0, 2)
        with pytest.raises(InputException):
            normalize_index_set([], 3)
        with pytest.raises(InputException):
            normalize_index_set([3], 3)


class TestMinors:

    def setup_class(self):
        self.m = QMatrix.of([[1, 2, 0], [3, 4, 1], [0, -1, 2]])

    def test_submatrix(self):
        assert matrix_service.submatrix(self.m, [2, 0], [1]).to_text() == [["2"], ["-1"]]

    def test_minor(self):
        assert matrix_service.minor(self.m, [0, 1], [0, 1]) == -2
        assert matrix_service.minor(self.m, [1], [2]) == 1

    def test_minor_requires_square_selection(self):
        with pytest.raises(InputException):
            matrix_service.minor(self.m, [0, 1], [0])

    def test_determinant(self):
        # 1·(8+1) - 2·(6-0) + 0 = -3
        assert matrix_service.determinant(self.m) == -3

    def test_principal_minor_order(self):
        m = QMatrix.of([[2, 1], [1, 2]])
        assert list(matrix_service.principal_minors(m)) == [((0,), 2), ((1,), 2), ((0, 1), 3)]

    def test_principal_minor_order_cap(self, monkeypatch):
        monkeypatch.setattr(settings, "PRINCIPAL_MINOR_MAX_ORDER", 2)
        with pytest.raises(ResourceLimitException) as exc_info:
            list(matrix_service.principal_minors(self.m))
        assert "PRINCIPAL_MINOR_MAX_ORDER" in exc_info.value.message

    @hsettings(max_examples=80, deadline=None)
    @given(square_matrices())
    def test_bareiss_matches_cofactor_expansion(self, rows):
        grid = [[Fraction(x) for x in row] for row in rows]
        assert bareiss_determinant(grid) == cofactor_determinant(grid)


class TestMatrixClasses:

    def test_p_and_p0(self):
        assert matrix_service.is_p_matrix(QMatrix.of([[2, 1], [1, 2]]))
        skew = QMatrix.of([[0, 1], [-1, 0]])
        assert not matrix_service.is_p_matrix(skew)
        assert matrix_service.is_p0_matrix(skew)
        assert not matrix_service.is_p0_matrix(QMatrix.of([[1, 2], [2, 1]]))

    def test_sign_nonsingular(self):
        assert matrix_service.is_sign_nonsingular(QMatrix.of([["-", "+"], ["-", "-"]]))
        assert not matrix_service.is_sign_nonsingular(QMatrix.of([["+", "+"], ["+", "+"]]))
        assert not matrix_service.is_sign_nonsingular(QMatrix.of([["0"]]))
        assert matrix_service.is_sign_nonsingular(QMatrix.of([[-3, 0], [5, 2]]))

    def test_sign_nonsingular_order_cap(self, monkeypatch):
        monkeypatch.setattr(settings, "SNS_MAX_ORDER", 1)
        with pytest.raises(ResourceLimitException):
            matrix_service.is_sign_nonsingular(QMatrix.of([["+", 0], [0, "+"]]))

    def test_sampling_is_deterministic_and_keeps_pattern(self):
        pattern = QMatrix.of([["+", "0"], ["-", "+"]])
        first = matrix_service.sample_qualitative_class(pattern, 7)
        assert first == matrix_service.sample_qualitative_class(pattern, 7)
        assert first.is_exact
        assert first.sign_pattern() == pattern.sign_pattern()
        for row in first.values():
            for value in row:
                assert abs(value) <= 2

    def test_sampling_rejects_empty_range(self):
        with pytest.raises(InputException):
            matrix_service.sample_qualitative_class(QMatrix.of([["+"]]), 1, (Fraction(2), Fraction(2)))


class TestProducts:

    def test_times_transpose(self):
        a = QMatrix.of([[1, 2], [0, 1]])
        b = QMatrix.of([[3, 0], [1, 1]])
        assert matrix_service.times_transpose(a, b).to_text() == [["3", "3"], ["0", "1"]]

    def test_times_transpose_shape_mismatch(self):
        with pytest.raises(InputException):
            matrix_service.times_transpose(QMatrix.of([[1, 2]]), QMatrix.of([[1], [2]]))

    def test_cauchy_binet_identity(self):
        a = QMatrix.of([[1, 2, 0], [0, 1, -1]])
        b = QMatrix.of([[2, 1, 1], [1, 0, 3]])
        product = matrix_service.times_transpose(a, b)
        assert matrix_service.cauchy_binet_minor(a, b, [0, 1]) == matrix_service.minor(product, [0, 1], [0, 1])

    def test_cauchy_binet_empty_sum(self):
        a = QMatrix.of([[1], [2]])
        b = QMatrix.of([[3], [4]])
        assert matrix_service.cauchy_binet_minor(a, b, [0, 1]) == 0

    @hsettings(max_examples=50, deadline=None)
    @given(
        st.integers(1, 3).flatmap(lambda n: st.integers(1, 4).flatmap(lambda m: st.tuples(
            st.lists(st.lists(st.integers(-2, 2), min_size=m, max_size=m), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(-2, 2), min_size=m, max_size=m), min_size=n, max_size=n),
        )))
    )
    def test_cauchy_binet_full_selection(self, grids):
        a, b = QMatrix.of(grids[0]), QMatrix.of(grids[1])
        gamma = list(range(a.rows))
        assert matrix_service.cauchy_binet_minor(a, b, gamma) == matrix_service.determinant(
            matrix_service.times_transpose(a, b)
        )
