"""
随机校验服务

在小规模随机实例上逐条检验各条图论判据与矩阵结论，失败时给出可重放的 seed 并贪心缩小反例。
行列式与矩阵乘法使用与 matrix_service 独立的实现（余子式展开）
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterator
from app.core.config import settings
from app.core.exception import CustomException, InputException
from app.core.middleware import StageTimer, log_stage
from app.models.analysis import AnalysisRequest, Subject
from app.models.dsr import DsrGraph
from app.models.matrix import Entry, QMatrix
from app.models.report import ConditionKind, OracleRun, TrialOutcome
from app.service.cycle_service import cycle_service
from app.service.dsr_service import dsr_service
from app.service.igraph_service import igraph_service
from app.service.injectivity_service import injectivity_service
from app.service.matrix_service import matrix_service
from app.service.nondegeneracy_service import nondegeneracy_service

logger = logging.getLogger(__name__)

MAGNITUDES = (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3))
ZERO_PROBABILITY = Fraction(2, 5)
POSITIVE_DIAGONAL_PROBABILITY = Fraction(9, 10)
SNS_SAMPLES = 100
COVERAGE_KEYS = ("infinite_label", "undirected", "parallel_pair")

# 检查函数：输入 → (是否通过, 谓词名, 见证)；谓词名 "skipped" 表示实例不满足前提
Check = Callable[[dict[str, Any]], tuple[bool, str, dict[str, Any]]]


# ==================== 独立的精确运算 ====================

def cofactor_determinant(grid: list[list[Fraction]]) -> Fraction:
    """沿第一行余子式展开"""
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return grid[0][0]
    total = Fraction(0)
    for j, value in enumerate(grid[0]):
        if value == 0:
            continue
        rest = [row[:j] + row[j + 1:] for row in grid[1:]]
        total += (-1) ** j * value * cofactor_determinant(rest)
    return total


def _times_transpose(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    return [[sum((x * y for x, y in zip(row_a, row_b)), Fraction(0)) for row_b in b] for row_a in a]


def _principal_minors(grid: list[list[Fraction]]) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    n = len(grid)
    for size in range(1, n + 1):
        for gamma in combinations(range(n), size):
            yield gamma, cofactor_determinant([[grid[i][j] for j in gamma] for i in gamma])


# ==================== 随机生成 ====================

def _trial_rng(seed: int, trial_id: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial_id)


def _random_entry(rng: random.Random, magnitudes=MAGNITUDES) -> Entry:
    if rng.random() < ZERO_PROBABILITY:
        return Entry.fixed(0)
    return Entry.fixed(rng.choice((1, -1)) * rng.choice(magnitudes))


def _random_matrix(rng: random.Random, n: int, m: int, magnitudes=MAGNITUDES) -> QMatrix:
    return QMatrix(tuple(tuple(_random_entry(rng, magnitudes) for _ in range(m)) for _ in range(n)))


def _random_pattern(rng: random.Random, n: int, diagonal_bias: bool = False) -> QMatrix:
    """diagonal_bias 时对角元以较高概率取正；负对角元在 G_{A,I} 中形成 e-环，证书必然不成立"""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            sign = _random_entry(rng).sign
            if diagonal_bias and i == j and rng.random() < POSITIVE_DIAGONAL_PROBABILITY:
                sign = 1
            row.append(Entry.of_sign(sign))
        rows.append(tuple(row))
    return QMatrix(tuple(rows))


def _size(rng: random.Random, dims: tuple[int, int]) -> tuple[int, int]:
    return rng.randint(1, dims[0]), rng.randint(1, dims[1])


def _matrix(inputs: dict[str, Any], key: str) -> QMatrix:
    return QMatrix.of(inputs[key])


def _coverage(g: DsrGraph) -> dict[str, int]:
    pairs: dict[tuple[int, int], int] = {}
    for e in g.edges:
        pairs[(e.s, e.r)] = pairs.get((e.s, e.r), 0) + 1
    return {
        "infinite_label": sum(1 for e in g.edges if not e.is_finite),
        "undirected": sum(1 for e in g.edges if e.is_undirected),
        "parallel_pair": sum(1 for count in pairs.values() if count == 2),
    }


# ==================== 检查函数 ====================

def check_lemma_nondegen(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """A·Bᵀ 非奇异 ⇒ 弱非退化；STAR_STAR 下：弱非退化 ⇔ 非奇异，且此时 det > 0"""
    a, b = _matrix(inputs, "A"), _matrix(inputs, "B")
    g = dsr_service.dsr_from_pair(a, b)
    det = cofactor_determinant(_times_transpose(a.values(), b.values()))
    weakly = nondegeneracy_service.is_weakly_nondegenerate(g)
    star_star = cycle_service.check_condition(g, ConditionKind.STAR_STAR).holds
    witness = {"det": str(det), "weakly_nondegenerate": weakly, "star_star": star_star}
    if det != 0 and not weakly:
        return False, "nonsingular-implies-weakly-nondegenerate", witness
    if star_star and weakly != (det != 0):
        return False, "star-star-weakly-nondegenerate-iff-nonsingular", witness
    if star_star and weakly and det <= 0:
        return False, "star-star-weakly-nondegenerate-implies-positive-det", witness
    return True, "lemma-nondegen", witness


def check_lemma_p(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """A·Bᵀ 为 P 矩阵 ⇒ 非退化；STAR_STAR 下两者等价"""
    a, b = _matrix(inputs, "A"), _matrix(inputs, "B")
    g = dsr_service.dsr_from_pair(a, b)
    product_grid = _times_transpose(a.values(), b.values())
    is_p = all(value > 0 for _, value in _principal_minors(product_grid))
    nondegenerate = nondegeneracy_service.is_nondegenerate(g)
    star_star = cycle_service.check_condition(g, ConditionKind.STAR_STAR).holds
    witness = {"p_matrix": is_p, "nondegenerate": nondegenerate, "star_star": star_star}
    if is_p and not nondegenerate:
        return False, "p-matrix-implies-nondegenerate", witness
    if star_star and nondegenerate and not is_p:
        return False, "star-star-nondegenerate-implies-p-matrix", witness
    return True, "lemma-p", witness


def check_mainimp(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """正环 ↔ e-cycle，长度 ≥ 2 的负环 ↔ o-cycle；正自环 ↔ 对角位置上的平行边 e-2-环"""
    m = _matrix(inputs, "M")
    report = injectivity_service.check_mainimp(m)
    witness = {
        "positive_cycle_in_h": report.positive_cycle_in_h,
        "e_cycle_in_g": report.e_cycle_in_g,
        "negative_cycle_in_h": report.negative_cycle_in_h,
        "o_cycle_in_g": report.o_cycle_in_g,
    }
    if not report.positive_agrees:
        return False, "positive-cycle-iff-e-cycle", witness
    if not report.negative_agrees:
        return False, "negative-cycle-iff-o-cycle", witness
    two_cycles = {
        c.vertices[0].index
        for c in cycle_service.enumerate_cycles(dsr_service.jdsr(m))
        if c.length == 2 and c.is_e_cycle and c.vertices[0].index == c.vertices[1].index
    }
    loops = {i for i in range(m.rows) if m.entry(i, i).sign > 0}
    if two_cycles != loops:
        witness["positive_self_loops"] = sorted(i + 1 for i in loops)
        witness["diagonal_two_cycles"] = sorted(i + 1 for i in two_cycles)
        return False, "positive-self-loop-iff-diagonal-e-two-cycle", witness
    return True, "mainimp", witness


def check_star_p0(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """G_{A,B} 满足 STAR ⇒ A·Bᵀ 的所有主子式 ≥ 0"""
    a, b = _matrix(inputs, "A"), _matrix(inputs, "B")
    g = dsr_service.dsr_from_pair(a, b)
    if not cycle_service.check_condition(g, ConditionKind.STAR).holds:
        return True, "skipped", {}
    for gamma, value in _principal_minors(_times_transpose(a.values(), b.values())):
        if value < 0:
            return False, "star-implies-p0", {"gamma": [i + 1 for i in gamma], "minor": str(value)}
    return True, "star-p0", {}


def check_cauchy_binet(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """sum_delta A[gamma|delta]·B[gamma|delta] = (A·Bᵀ)[gamma]"""
    a, b = _matrix(inputs, "A"), _matrix(inputs, "B")
    gamma = [i for i in inputs["gamma"] if i < a.rows] or [0]
    product_grid = _times_transpose(a.values(), b.values())
    expected = cofactor_determinant([[product_grid[i][j] for j in gamma] for i in gamma])
    actual = matrix_service.cauchy_binet_minor(a, b, gamma)
    witness = {"expected": str(expected), "actual": str(actual)}
    if expected != actual:
        return False, "cauchy-binet-identity", witness
    return True, "cauchy-binet", witness


def check_sign_nonsingular(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """G_{A,I} 满足 STAR_STAR 且弱非退化 ⇒ Q(A) 中的样本都非奇异；再加非退化 ⇒ 样本都是 P 矩阵"""
    a = _matrix(inputs, "A")
    certificate = injectivity_service.certify_matrix_class(a)
    if not certificate.sign_nonsingular:
        return True, "skipped", {}
    if not matrix_service.is_sign_nonsingular(a):
        return False, "certificate-implies-permutation-sign-nonsingular", {}
    for k in range(SNS_SAMPLES):
        sample_seed = inputs["sample_seed"] + k
        x = matrix_service.sample_qualitative_class(a, sample_seed, (Fraction(0), Fraction(3)))
        grid = x.values()
        if cofactor_determinant(grid) == 0:
            return False, "sample-nonsingular", {"sample_seed": sample_seed, "sample": x.to_text()}
        if certificate.qualitative_class_p and not all(v > 0 for _, v in _principal_minors(grid)):
            return False, "sample-p-matrix", {"sample_seed": sample_seed, "sample": x.to_text()}
    return True, "sns", {"qualitative_class_p": certificate.qualitative_class_p}


def check_duality(inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """对偶分析等于取负对象的分析改写；H_{-M} 无正环 ⇔ G_{M,I} 满足 STAR_STAR"""
    m = _matrix(inputs, "M")
    dual_request = AnalysisRequest(subject=Subject(jacobian=m), dual=True)
    negated_request = AnalysisRequest(subject=Subject(jacobian=m.negated()))
    dual = injectivity_service.analyze(dual_request)
    relabelled = injectivity_service.relabel_result(injectivity_service.analyze(negated_request), dual_request)
    if dual != relabelled:
        return False, "dual-equals-relabelled-negation", {}
    no_positive = not igraph_service.has_positive_cycle(igraph_service.igraph_from_matrix(m.negated()))
    star_star = cycle_service.check_condition(dsr_service.jdsr_dual(m), ConditionKind.STAR_STAR).holds
    witness = {"negated_igraph_no_positive_cycle": no_positive, "dual_jdsr_star_star": star_star}
    if no_positive != star_star:
        return False, "negated-igraph-iff-dual-jdsr-star-star", witness
    return True, "duality", witness


# ==================== 套件 ====================

def _gen_pair(rng: random.Random, dims: tuple[int, int]) -> dict[str, Any]:
    n, m = _size(rng, dims)
    return {"A": _random_matrix(rng, n, m).to_text(), "B": _random_matrix(rng, n, m).to_text()}


def _gen_square_int(rng: random.Random, dims: tuple[int, int]) -> dict[str, Any]:
    n = rng.randint(1, dims[0])
    return {"M": _random_matrix(rng, n, n, magnitudes=(1, 2)).to_text()}


def _gen_cauchy_binet(rng: random.Random, dims: tuple[int, int]) -> dict[str, Any]:
    inputs = _gen_pair(rng, dims)
    n = len(inputs["A"])
    size = rng.randint(1, n)
    inputs["gamma"] = sorted(rng.sample(range(n), size))
    return inputs


def _gen_pattern(rng: random.Random, dims: tuple[int, int]) -> dict[str, Any]:
    n = rng.randint(1, dims[0])
    return {"A": _random_pattern(rng, n, diagonal_bias=True).to_text(), "sample_seed": rng.randrange(2 ** 31)}


@dataclass(frozen=True)
class Suite:
    name: str
    generate: Callable[[random.Random, tuple[int, int]], dict[str, Any]]
    check: Check
    default_dims: tuple[int, int]


SUITES: dict[str, Suite] = {
    s.name: s for s in (
        Suite("lemma-nondegen", _gen_pair, check_lemma_nondegen, (4, 4)),
        Suite("lemma-p", _gen_pair, check_lemma_p, (4, 4)),
        Suite("mainimp", _gen_square_int, check_mainimp, (5, 5)),
        Suite("star-p0", _gen_pair, check_star_p0, (4, 4)),
        Suite("cauchy-binet", _gen_cauchy_binet, check_cauchy_binet, (4, 5)),
        Suite("sns", _gen_pattern, check_sign_nonsingular, (3, 3)),
        Suite("duality", _gen_square_int, check_duality, (4, 4)),
    )
}


def _evaluate(check: Check, inputs: dict[str, Any]) -> tuple[bool, str, dict[str, Any]]:
    """执行检查；内部异常视为失败"""
    try:
        return check(inputs)
    except InputException:
        raise
    except CustomException as exc:
        return False, "error", {"error": exc.message}


def _graph_for_coverage(suite: str, inputs: dict[str, Any]) -> DsrGraph | None:
    if "B" in inputs:
        return dsr_service.dsr_from_pair(_matrix(inputs, "A"), _matrix(inputs, "B"))
    if "M" in inputs:
        return dsr_service.jdsr(_matrix(inputs, "M"))
    if "A" in inputs:
        return dsr_service.jdsr_dual(_matrix(inputs, "A"))
    return None


def run_trial(suite_name: str, seed: int, trial_id: int, dims: tuple[int, int]) -> tuple[TrialOutcome, dict[str, int]]:
    """执行单次试验（模块级函数，可在子进程中运行）"""
    suite = SUITES[suite_name]
    inputs = suite.generate(_trial_rng(seed, trial_id), dims)
    passed, predicate, witness = _evaluate(suite.check, inputs)
    graph = _graph_for_coverage(suite_name, inputs)
    coverage = _coverage(graph) if graph is not None else {}
    outcome = TrialOutcome(
        suite=suite_name,
        trial_id=trial_id,
        seed=seed,
        predicate=predicate if predicate != "skipped" else suite_name,
        passed=passed,
        inputs=inputs,
        witness=None if passed else witness,
        skipped=predicate == "skipped",
    )
    return outcome, coverage


class OracleService:
    """
    随机校验
    """

    def resolve_dims(self, suite: str, dims: tuple[int, int] | None) -> tuple[int, int]:
        """校验套件名与维数上界，未给出维数时使用套件默认值"""
        if suite not in SUITES:
            raise InputException(f"未知的校验套件: {suite}（可选 {', '.join(SUITES)}）")
        dims = dims or SUITES[suite].default_dims
        cap = settings.ORACLE_MAX_DIM
        if not (1 <= dims[0] <= cap and 1 <= dims[1] <= cap):
            raise InputException(f"维数 {dims} 超出范围 1..{cap}")
        return tuple(dims)

    def run_suite(
        self,
        suite: str,
        trials: int | None = None,
        dims: tuple[int, int] | None = None,
        seed: int | None = None,
        workers: int | None = None,
    ) -> OracleRun:
        """
        运行一个校验套件

        Args:
            suite: 套件名
            trials: 试验次数
            dims: 每次试验维数的上界 (n, m)
            seed: 随机种子
            workers: 并发进程数，>1 时使用进程池

        Returns:
            OracleRun: 结果按 trial_id 排序，与并发方式无关

        Raises:
            InputException: 未知套件或维数越界
        """
        dims = self.resolve_dims(suite, dims)
        trials = settings.ORACLE_DEFAULT_TRIALS if trials is None else trials
        seed = settings.ORACLE_DEFAULT_SEED if seed is None else seed
        workers = settings.ORACLE_WORKERS if workers is None else workers
        if trials < 0:
            raise InputException(f"试验次数不能为负: {trials}")
        ids = range(trials)
        with StageTimer(f"oracle:{suite}"):
            if workers > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(run_trial, [suite] * trials, [seed] * trials, ids, [dims] * trials))
            else:
                results = [run_trial(suite, seed, i, dims) for i in ids]
        results.sort(key=lambda r: r[0].trial_id)
        coverage = {key: sum(c.get(key, 0) for _, c in results) for key in COVERAGE_KEYS}
        outcomes = []
        for outcome, _ in results:
            if not outcome.passed:
                # inputs 保持原样以便重放，缩小后的实例放进 witness
                minimized = self.minimize_counterexample(outcome)
                outcome = replace(outcome, witness={**(outcome.witness or {}), "minimized": minimized.inputs})
                logger.warning(f"Oracle failure: {suite} seed={seed} trial={outcome.trial_id} ({outcome.predicate})")
            outcomes.append(outcome)
        run = OracleRun(
            suite=suite,
            seed=seed,
            trials=trials,
            dims=dims,
            outcomes=tuple(outcomes),
            coverage=coverage,
        )
        logger.info(f"Oracle suite {suite}: {trials} trials, {run.checked} checked, {len(run.failures)} failures")
        return run

    def replay(self, suite: str, seed: int, trial_id: int, dims: tuple[int, int] | None = None) -> TrialOutcome:
        """按 seed 与 trial_id 重放单次试验"""
        dims = self.resolve_dims(suite, dims)
        outcome, _ = run_trial(suite, seed, trial_id, dims)
        return outcome

    # ==================== 命名套件 ====================

    def verify_lemma_nondegen(self, trials: int, dims: tuple[int, int], seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("lemma-nondegen", trials, dims, seed).outcomes)

    def verify_lemma_nondegen1(self, trials: int, dims: tuple[int, int], seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("lemma-p", trials, dims, seed).outcomes)

    def verify_mainimp(self, trials: int, n: int, seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("mainimp", trials, (n, n), seed).outcomes)

    def verify_star_implies_p0(self, trials: int, dims: tuple[int, int], seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("star-p0", trials, dims, seed).outcomes)

    def verify_cauchy_binet(self, trials: int, dims: tuple[int, int], seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("cauchy-binet", trials, dims, seed).outcomes)

    def verify_sign_nonsingular(self, trials: int, n: int, seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("sns", trials, (n, n), seed).outcomes)

    def verify_duality(self, trials: int, n: int, seed: int) -> list[TrialOutcome]:
        return list(self.run_suite("duality", trials, (n, n), seed).outcomes)

    # ==================== 反例缩小 ====================

    def _shrink_candidates(self, inputs: dict[str, Any]) -> Iterator[dict[str, Any]]:
        """
        候选缩小步骤：先删行/列，再把元素置零，最后把幅值改为 1
        同一输入中的矩阵保持维数一致（方阵同时删同号的行和列）
        """
        keys = [k for k in ("A", "B", "M") if k in inputs]
        grids = {k: inputs[k] for k in keys}
        rows = len(grids[keys[0]])
        cols = len(grids[keys[0]][0])
        square = "M" in grids or "sample_seed" in inputs

        def with_grids(new: dict[str, list[list[str]]]) -> dict[str, Any]:
            result = dict(inputs)
            result.update(new)
            if "gamma" in result:
                n = len(new[keys[0]])
                result["gamma"] = [i for i in result["gamma"] if i < n] or [0]
            return result

        if rows > 1:
            for i in range(rows):
                if square:
                    yield with_grids({k: [r[:i] + r[i + 1:] for k2, r in enumerate(g) if k2 != i] for k, g in grids.items()})
                else:
                    yield with_grids({k: [r for k2, r in enumerate(g) if k2 != i] for k, g in grids.items()})
        if cols > 1 and not square:
            for j in range(cols):
                yield with_grids({k: [r[:j] + r[j + 1:] for r in g] for k, g in grids.items()})
        for k in keys:
            for i in range(rows):
                for j in range(len(grids[k][i])):
                    if grids[k][i][j] != "0":
                        grid = [list(r) for r in grids[k]]
                        grid[i][j] = "0"
                        yield with_grids({k: grid})
        for k in keys:
            for i in range(rows):
                for j in range(len(grids[k][i])):
                    text = grids[k][i][j]
                    if text in ("0", "+", "-", "1", "-1"):
                        continue
                    grid = [list(r) for r in grids[k]]
                    grid[i][j] = "-1" if text.startswith("-") else "1"
                    yield with_grids({k: grid})

    @log_stage("oracle:minimize")
    def minimize_counterexample(self, outcome: TrialOutcome, predicate: Check | None = None) -> TrialOutcome:
        """
        贪心缩小失败实例：只要检查仍失败就接受该缩小步骤，直到没有步骤可用

        Args:
            outcome: 失败的试验结果
            predicate: 检查函数，默认使用该套件的检查

        Returns:
            TrialOutcome: 缩小后的失败实例（确定性）

        Raises:
            InputException: 传入的是通过的结果
        """
        if outcome.passed:
            raise InputException("只能缩小失败的试验结果")
        check = predicate or SUITES[outcome.suite].check
        current = outcome.inputs
        name, witness = outcome.predicate, outcome.witness
        progress = True
        while progress:
            progress = False
            for candidate in self._shrink_candidates(current):
                passed, cand_name, cand_witness = _evaluate(check, candidate)
                if not passed:
                    current, name, witness = candidate, cand_name, cand_witness
                    progress = True
                    break
        return replace(outcome, inputs=current, predicate=name, witness=witness)


oracle_service = OracleService()
