"""
精确矩阵服务：子矩阵、子式、矩阵类判定、定性类采样
"""
import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence
from app.core.config import settings
from app.core.exception import InputException, ResourceLimitException
from app.models.matrix import Entry, IndexSet, QMatrix, normalize_index_set

logger = logging.getLogger(__name__)

# 采样时幅值区间被等分的份数
SAMPLE_GRID = 64


def bareiss_determinant(grid: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Bareiss 无除法消元求行列式（带行交换）

    Args:
        grid: 方阵的精确值

    Returns:
        Fraction: 行列式
    """
    n = len(grid)
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in grid]
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


class MatrixService:
    """
    精确矩阵运算
    """

    # ==================== 子矩阵与子式 ====================

    def submatrix(self, m: QMatrix, gamma: Sequence[int], delta: Sequence[int]) -> QMatrix:
        """
        取子矩阵 M(gamma|delta)

        Args:
            m: 矩阵
            gamma: 行下标（从 0 开始）
            delta: 列下标（从 0 开始）

        Returns:
            QMatrix: |gamma|×|delta| 子矩阵

        Raises:
            InputException: 下标为空或越界
        """
        rows = normalize_index_set(gamma, m.rows, "row")
        cols = normalize_index_set(delta, m.cols, "column")
        return QMatrix(tuple(tuple(m.entry(i, j) for j in cols) for i in rows))

    def minor(self, m: QMatrix, gamma: Sequence[int], delta: Sequence[int]) -> Fraction:
        """
        子式 M[gamma|delta] = det(M(gamma|delta))

        Raises:
            InputException: 选择不是方的
            QualitativeNotEvaluableException: 子矩阵中含符号元素
        """
        rows = normalize_index_set(gamma, m.rows, "row")
        cols = normalize_index_set(delta, m.cols, "column")
        if len(rows) != len(cols):
            raise InputException(f"子式要求方形选择: |gamma|={len(rows)}, |delta|={len(cols)}")
        return bareiss_determinant([[m.value(i, j) for j in cols] for i in rows])

    def determinant(self, m: QMatrix) -> Fraction:
        if not m.is_square:
            raise InputException(f"行列式要求方阵，得到 {m.rows}×{m.cols}")
        return bareiss_determinant(m.values())

    def principal_minors(self, m: QMatrix) -> Iterator[tuple[IndexSet, Fraction]]:
        """
        按 (|gamma|, gamma) 顺序枚举全部 2^n-1 个主子式

        Raises:
            InputException: 非方阵
            ResourceLimitException: 阶数超过 PRINCIPAL_MINOR_MAX_ORDER
        """
        if not m.is_square:
            raise InputException(f"主子式要求方阵，得到 {m.rows}×{m.cols}")
        if m.rows > settings.PRINCIPAL_MINOR_MAX_ORDER:
            raise ResourceLimitException(
                "PRINCIPAL_MINOR_MAX_ORDER", settings.PRINCIPAL_MINOR_MAX_ORDER, f"矩阵阶数 {m.rows}"
            )
        grid = m.values()
        for size in range(1, m.rows + 1):
            for gamma in combinations(range(m.rows), size):
                yield gamma, bareiss_determinant([[grid[i][j] for j in gamma] for i in gamma])

    # ==================== 矩阵类 ====================

    def is_p_matrix(self, m: QMatrix) -> bool:
        """所有主子式 > 0"""
        return all(value > 0 for _, value in self.principal_minors(m))

    def is_p0_matrix(self, m: QMatrix) -> bool:
        """所有主子式 ≥ 0，即 P 矩阵的闭包"""
        return all(value >= 0 for _, value in self.principal_minors(m))

    def is_sign_nonsingular(self, m: QMatrix) -> bool:
        """
        符号非奇异判定：行列式展开中至少有一个非零项，且所有非零项同号
        只读取符号模式，允许符号元素

        Raises:
            InputException: 非方阵
            ResourceLimitException: 阶数超过 SNS_MAX_ORDER
        """
        if not m.is_square:
            raise InputException(f"符号非奇异判定要求方阵，得到 {m.rows}×{m.cols}")
        n = m.rows
        if n > settings.SNS_MAX_ORDER:
            raise ResourceLimitException("SNS_MAX_ORDER", settings.SNS_MAX_ORDER, f"矩阵阶数 {n}")
        pattern = m.sign_pattern()
        term_signs: set[int] = set()

        def expand(row: int, used: list[bool], perm: list[int], product: int) -> bool:
            # 返回 False 表示已经出现两种符号，可以停止
            if row == n:
                inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
                term_signs.add(product * (-1) ** inversions)
                return len(term_signs) < 2
            for col in range(n):
                if used[col] or pattern[row][col] == 0:
                    continue
                used[col] = True
                perm.append(col)
                keep_going = expand(row + 1, used, perm, product * pattern[row][col])
                perm.pop()
                used[col] = False
                if not keep_going:
                    return False
            return True

        expand(0, [False] * n, [], 1)
        return len(term_signs) == 1

    # ==================== 采样与乘法 ====================

    def sample_qualitative_class(
        self,
        m: QMatrix,
        seed: int,
        magnitude_range: tuple[Fraction, Fraction] = (Fraction(0), Fraction(2)),
    ) -> QMatrix:
        """
        从定性类 Q(M) 中确定性地取一个精确矩阵

        每个非零位置的幅值取自区间 (lo, hi] 的等分点，符号与 M 相同；零位置保持为零

        Args:
            m: 矩阵或符号模式
            seed: 随机种子
            magnitude_range: 幅值区间 (lo, hi]

        Returns:
            QMatrix: 精确矩阵

        Raises:
            InputException: 区间为空或下界为负
        """
        lo, hi = Fraction(magnitude_range[0]), Fraction(magnitude_range[1])
        if lo < 0 or lo >= hi:
            raise InputException(f"幅值区间 ({lo}, {hi}] 为空或含负数")
        rng = random.Random(seed)
        rows = []
        for row in m.entries:
            sampled = []
            for entry in row:
                if entry.is_zero:
                    sampled.append(entry)
                    continue
                step = rng.randint(1, SAMPLE_GRID)
                magnitude = lo + (hi - lo) * Fraction(step, SAMPLE_GRID)
                sampled.append(Entry.fixed(entry.sign * magnitude))
            rows.append(tuple(sampled))
        return QMatrix(tuple(rows))

    def multiply(self, a: QMatrix, b: QMatrix) -> QMatrix:
        """精确矩阵乘法 A·B"""
        if a.cols != b.rows:
            raise InputException(f"矩阵乘法维数不匹配: {a.rows}×{a.cols} · {b.rows}×{b.cols}")
        left, right = a.values(), b.values()
        return QMatrix.of(
            [[sum((left[i][k] * right[k][j] for k in range(a.cols)), Fraction(0))
              for j in range(b.cols)] for i in range(a.rows)]
        )

    def times_transpose(self, a: QMatrix, b: QMatrix) -> QMatrix:
        """A·Bᵀ，要求 A、B 同型"""
        if a.shape != b.shape:
            raise InputException(f"A 与 B 维数不一致: {a.shape} vs {b.shape}")
        return self.multiply(a, b.transposed())

    def cauchy_binet_minor(self, a: QMatrix, b: QMatrix, gamma: Sequence[int]) -> Fraction:
        """
        Cauchy-Binet 展开：sum over |delta|=|gamma| of A[gamma|delta]·B[gamma|delta]

        结果应等于 minor(A·Bᵀ, gamma, gamma)；|gamma| > m 时为空和 0

        Raises:
            InputException: A、B 维数不一致或下标越界
        """
        if a.shape != b.shape:
            raise InputException(f"A 与 B 维数不一致: {a.shape} vs {b.shape}")
        rows = normalize_index_set(gamma, a.rows, "row")
        total = Fraction(0)
        for delta in combinations(range(a.cols), len(rows)):
            total += self.minor(a, rows, delta) * self.minor(b, rows, delta)
        return total


matrix_service = MatrixService()
