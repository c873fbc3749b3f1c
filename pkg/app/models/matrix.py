"""
精确矩阵模型
元素为精确有理数或纯符号，QMatrix 既可表示一个矩阵，也可表示一个定性类
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence
from app.core.exception import InputException, QualitativeNotEvaluableException

# 有理数统一用 Fraction：始终最简、分母为正、运算精确
Rational = Fraction

# 下标集合：升序、去重、从 0 开始
IndexSet = tuple[int, ...]


class EntryKind(str, Enum):
    """矩阵元素类型枚举"""
    FIXED = "fixed"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO = "zero"


@dataclass(frozen=True)
class Entry:
    """
    矩阵元素

    FIXED 携带非零精确值；POSITIVE/NEGATIVE 表示未知的正/负数；零只能用 ZERO 表示
    """
    kind: EntryKind
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind == EntryKind.FIXED:
            if self.value is None:
                raise InputException("FIXED 元素必须带数值")
            if self.value == 0:
                raise InputException("零值必须写作 \"0\"，不能作为 FIXED 元素")
        elif self.value is not None:
            raise InputException(f"{self.kind.value} 元素不能带数值")

    @classmethod
    def fixed(cls, value: int | Fraction | str) -> "Entry":
        """由精确值构造元素，0 自动转为 ZERO"""
        v = Fraction(value)
        if v == 0:
            return ZERO
        return cls(EntryKind.FIXED, v)

    @classmethod
    def of_sign(cls, sign: int) -> "Entry":
        """由符号构造定性元素"""
        if sign > 0:
            return POSITIVE
        if sign < 0:
            return NEGATIVE
        return ZERO

    @property
    def sign(self) -> int:
        if self.kind == EntryKind.FIXED:
            return 1 if self.value > 0 else -1
        if self.kind == EntryKind.POSITIVE:
            return 1
        if self.kind == EntryKind.NEGATIVE:
            return -1
        return 0

    @property
    def is_exact(self) -> bool:
        return self.kind in (EntryKind.FIXED, EntryKind.ZERO)

    @property
    def is_zero(self) -> bool:
        return self.kind == EntryKind.ZERO

    def exact_value(self) -> Fraction:
        """
        取精确值

        Raises:
            QualitativeNotEvaluableException: 元素只有符号
        """
        if self.kind == EntryKind.ZERO:
            return Fraction(0)
        if self.kind == EntryKind.FIXED:
            return self.value
        raise QualitativeNotEvaluableException(
            f"qualitative matrix not evaluable: 元素 '{self.to_text()}' 只有符号"
        )

    def negated(self) -> "Entry":
        if self.kind == EntryKind.FIXED:
            return Entry(EntryKind.FIXED, -self.value)
        if self.kind == EntryKind.POSITIVE:
            return NEGATIVE
        if self.kind == EntryKind.NEGATIVE:
            return POSITIVE
        return ZERO

    def to_text(self) -> str:
        """文本形式："-3"、"1/2"、"+"、"-"、"0" """
        if self.kind == EntryKind.FIXED:
            return str(self.value)
        if self.kind == EntryKind.POSITIVE:
            return "+"
        if self.kind == EntryKind.NEGATIVE:
            return "-"
        return "0"


ZERO = Entry(EntryKind.ZERO)
POSITIVE = Entry(EntryKind.POSITIVE)
NEGATIVE = Entry(EntryKind.NEGATIVE)


def _coerce_entry(raw: "Entry | int | Fraction | str") -> Entry:
    if isinstance(raw, Entry):
        return raw
    if isinstance(raw, str):
        text = raw.strip()
        if text == "+":
            return POSITIVE
        if text == "-":
            return NEGATIVE
        if text == "0":
            return ZERO
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputException(f"无法解析的矩阵元素: {raw!r}")
        if value == 0:
            raise InputException(f"零值元素必须写作 \"0\"，收到 {raw!r}")
        return Entry(EntryKind.FIXED, value)
    if isinstance(raw, bool):
        raise InputException(f"无法解析的矩阵元素: {raw!r}")
    if isinstance(raw, (int, Fraction)):
        return Entry.fixed(raw)
    raise InputException(f"无法解析的矩阵元素: {raw!r}")


@dataclass(frozen=True)
class QMatrix:
    """
    n×m 矩阵，元素为 Entry
    不含符号元素时称为精确矩阵
    """
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise InputException("矩阵维数必须 ≥ 1")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise InputException("矩阵各行长度不一致")

    # ==================== 构造 ====================

    @classmethod
    def of(cls, rows: Iterable[Iterable["Entry | int | Fraction | str"]]) -> "QMatrix":
        """
        由嵌套列表构造矩阵，元素可以是 Entry、int、Fraction 或文本

        Args:
            rows: 行列表

        Returns:
            QMatrix
        """
        return cls(tuple(tuple(_coerce_entry(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int, scale: int | Fraction = 1) -> "QMatrix":
        return cls.of([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int) -> "QMatrix":
        return cls(tuple(tuple(ZERO for _ in range(m)) for _ in range(n)))

    # ==================== 属性 ====================

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for row in self.entries for e in row)

    def entry(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def value(self, i: int, j: int) -> Fraction:
        return self.entries[i][j].exact_value()

    def values(self) -> list[list[Fraction]]:
        """精确值网格（遇到符号元素抛出 QualitativeNotEvaluableException）"""
        return [[e.exact_value() for e in row] for row in self.entries]

    def sign_pattern(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.sign for e in row) for row in self.entries)

    # ==================== 变换 ====================

    def negated(self) -> "QMatrix":
        return QMatrix(tuple(tuple(e.negated() for e in row) for row in self.entries))

    def transposed(self) -> "QMatrix":
        return QMatrix(tuple(zip(*self.entries)))

    def to_text(self) -> list[list[str]]:
        return [[e.to_text() for e in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(e.to_text() for e in row) + "]" for row in self.entries) + "]"


def normalize_index_set(indices: Sequence[int], bound: int, what: str = "index") -> IndexSet:
    """
    校验并规范化下标集合

    Args:
        indices: 下标序列（从 0 开始）
        bound: 上界（不含）
        what: 出错时使用的名称

    Returns:
        升序去重后的下标元组

    Raises:
        InputException: 为空或越界
    """
    result = tuple(sorted(set(indices)))
    if not result:
        raise InputException(f"{what} 集合不能为空")
    for idx in result:
        if isinstance(idx, bool) or not isinstance(idx, int) or idx < 0 or idx >= bound:
            raise InputException(f"{what} 下标越界: {idx}（范围 0..{bound - 1}）")
    return result
