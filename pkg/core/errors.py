# core/errors.py
"""
例外階層

所有模組共用同一個基底 LatticeError，CLI 只需要攔截這一個類別即可決定 exit code 2。
"""


class LatticeError(Exception):
    """格（lattice）對偶化工具的基底錯誤"""
    pass


class ParseError(LatticeError):
    """文字格式解析失敗（附行號）"""

    def __init__(self, message: str, line_no: int = None, source: str = None):
        self.line_no = line_no
        self.source = source
        where = ""
        if source:
            where += f"{source}"
        if line_no is not None:
            where += f":{line_no}" if where else f"line {line_no}"
        super().__init__(f"{where}: {message}" if where else message)


class UnknownElement(LatticeError):
    """元素不在所屬結構的基底集合中"""
    pass


class ReservedToken(LatticeError):
    """使用者輸入以底線開頭的 token（保留給歸約輔助頂點）"""
    pass


class CycleError(LatticeError):
    """關係的遞移閉包違反反對稱性"""
    pass


class CapExceeded(LatticeError):
    """實例超過桌面規模上限"""
    pass


class OracleCapExceeded(CapExceeded):
    """暴力 oracle 的元素數超過上限"""
    pass


class GroundMismatch(LatticeError):
    """超圖/圖的頂點集合與偏序的元素集合不一致"""
    pass


class NotInSet(LatticeError):
    pass


class NotInClique(LatticeError):
    pass


class InvalidGraph(LatticeError):
    """自環、未宣告端點等不合法的圖"""
    pass


class NotSplit(LatticeError):
    pass


class NotNIPoset(LatticeError):
    pass


class NotWeakNI(LatticeError):
    pass


class NotTriangleFree(LatticeError):
    pass


class NoSolution(LatticeError):
    """B+ = {X}，不存在任何解"""
    pass


class NotIdealFamily(LatticeError):
    """集合族中有非理想（ideal）或彼此可比較的成員"""
    pass


class EmptyEdge(LatticeError):
    pass


class EmptyHypergraph(LatticeError):
    pass


class InconsistentSolutions(LatticeError):
    """歸約回推時遇到形狀不符合 claim 的解"""
    pass


class ContextInvalid(LatticeError):
    pass


class StructureViolation(LatticeError):
    """結構性定理的結論在輸入上不成立（代表輸入不一致）"""
    pass


class NotAValidDStar(LatticeError):
    pass


class InvalidParams(LatticeError):
    pass
