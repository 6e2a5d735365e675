# core/poset.py
"""
有限偏序（poset）

核心概念：
1. 以布林可達矩陣 lt 儲存嚴格序（lt[i, j] ⇔ elements[i] < elements[j]）
2. ideal / filter / antichain 相關運算全部在 lt 上完成，不建立整個格 L(P)
3. enumerate_ideals 只給桌面規模 oracle 使用（預設上限 20 個元素）

元素一律是非空字串 token；所有需要決定順序的地方都用 token 的字典序。
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import CycleError, NotIdealFamily, OracleCapExceeded, UnknownElement

logger = logging.getLogger(__name__)

Element = str
ElementSet = FrozenSet[str]


def canonical(members: Iterable[Element]) -> Tuple[Element, ...]:
    """集合的標準形式：排序後的 token 序列"""
    return tuple(sorted(members))


def minimal_sets(family: Iterable[Iterable[Element]]) -> List[ElementSet]:
    """⊆-極小成員（去重後依標準形式排序）"""
    unique = {frozenset(s) for s in family}
    by_size = sorted(unique, key=lambda s: (len(s), canonical(s)))
    kept: List[ElementSet] = []
    for candidate in by_size:
        if not any(k <= candidate for k in kept):
            kept.append(candidate)
    return sorted(kept, key=canonical)


def maximal_sets(family: Iterable[Iterable[Element]]) -> List[ElementSet]:
    """⊆-極大成員"""
    unique = {frozenset(s) for s in family}
    by_size = sorted(unique, key=lambda s: (-len(s), canonical(s)))
    kept: List[ElementSet] = []
    for candidate in by_size:
        if not any(candidate <= k for k in kept):
            kept.append(candidate)
    return sorted(kept, key=canonical)


def is_sperner(family: Sequence[ElementSet]) -> bool:
    """兩兩 ⊆-不可比較"""
    members = list({frozenset(s) for s in family})
    if len(members) != len(family):
        return False
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a <= b or b <= a:
                return False
    return True


@dataclass(frozen=True, eq=False)
class SetFamily:
    """
    標準化的集合族

    成員去重並依標準形式排序；兩個 SetFamily 相等 ⇔ 成員集合相等。
    """
    members: Tuple[ElementSet, ...] = ()

    @classmethod
    def of(cls, sets: Iterable[Iterable[Element]]) -> 'SetFamily':
        unique = {frozenset(s) for s in sets}
        return cls(tuple(sorted(unique, key=canonical)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return frozenset(item) in set(self.members)

    def as_set(self) -> FrozenSet[ElementSet]:
        return frozenset(self.members)

    def lines(self) -> List[Tuple[Element, ...]]:
        return [canonical(m) for m in self.members]

    def is_antichain(self) -> bool:
        return is_sperner(self.members)


@dataclass(frozen=True, eq=False)
class IdealFamily(SetFamily):
    """每個成員都是某個 poset 的 ideal，且兩兩 ⊆-不可比較（格中的 antichain）"""

    def validate(self, poset: 'Poset', what: str = "family") -> 'IdealFamily':
        for member in self.members:
            poset.check_members(member)
            if not poset.is_ideal(member):
                raise NotIdealFamily(f"{what}: {{{' '.join(canonical(member))}}} 不是 ideal")
        if not self.is_antichain():
            raise NotIdealFamily(f"{what}: 成員之間存在包含關係")
        return self


class Poset:
    """
    不可變的有限嚴格偏序

    Attributes:
        elements: 宣告順序的元素 tuple
        lt: 唯讀 n×n 布林矩陣，lt[i, j] ⇔ elements[i] < elements[j]
    """

    def __init__(self, elements: Sequence[Element], lt: np.ndarray):
        self.elements: Tuple[Element, ...] = tuple(elements)
        self._index: Dict[Element, int] = {x: i for i, x in enumerate(self.elements)}
        matrix = np.array(lt, dtype=bool, copy=True)
        matrix.setflags(write=False)
        self.lt = matrix
        self._down_bits: Optional[List[int]] = None

    # ==================== 基本查詢 ====================

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        if set(self.elements) != set(other.elements):
            return False
        return self.relation_pairs() == other.relation_pairs()

    def __hash__(self) -> int:
        return hash((frozenset(self.elements), frozenset(self.relation_pairs())))

    def __repr__(self) -> str:
        return f"Poset(n={len(self)}, comparabilities={int(self.lt.sum())})"

    @property
    def element_set(self) -> ElementSet:
        return frozenset(self.elements)

    def index(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"未知元素: {x!r}") from None

    def check_members(self, members: Iterable[Element]) -> ElementSet:
        members = frozenset(members)
        unknown = members - self.element_set
        if unknown:
            raise UnknownElement(f"未知元素: {' '.join(sorted(unknown))}")
        return members

    def less(self, x: Element, y: Element) -> bool:
        return bool(self.lt[self.index(x), self.index(y)])

    def leq(self, x: Element, y: Element) -> bool:
        return x == y or self.less(x, y)

    def comparable(self, x: Element, y: Element) -> bool:
        return self.less(x, y) or self.less(y, x)

    def relation_pairs(self) -> List[Tuple[Element, Element]]:
        """所有 x < y 的配對（依 token 排序）"""
        rows, cols = np.nonzero(self.lt)
        return sorted((self.elements[i], self.elements[j]) for i, j in zip(rows, cols))

    def covers(self) -> List[Tuple[Element, Element]]:
        """Hasse 圖的覆蓋關係：x < y 且中間沒有其他元素"""
        lt_int = self.lt.astype(np.int32)
        through = (lt_int @ lt_int) > 0
        cover = self.lt & ~through
        rows, cols = np.nonzero(cover)
        return sorted((self.elements[i], self.elements[j]) for i, j in zip(rows, cols))

    def _mask(self, members: Iterable[Element]) -> np.ndarray:
        mask = np.zeros(len(self.elements), dtype=bool)
        for x in members:
            mask[self.index(x)] = True
        return mask

    def _from_mask(self, mask: np.ndarray) -> ElementSet:
        return frozenset(self.elements[i] for i in np.flatnonzero(mask))

    # ==================== 閉包 ====================

    def down(self, x: Element) -> ElementSet:
        """主 ideal ↓x"""
        return self.down_closure([x])

    def up(self, x: Element) -> ElementSet:
        """主 filter ↑x"""
        return self.up_closure([x])

    def down_closure(self, members: Iterable[Element]) -> ElementSet:
        mask = self._mask(members)
        below = self.lt[:, mask].any(axis=1) if mask.any() else mask
        return self._from_mask(mask | below)

    def up_closure(self, members: Iterable[Element]) -> ElementSet:
        mask = self._mask(members)
        above = self.lt[mask, :].any(axis=0) if mask.any() else mask
        return self._from_mask(mask | above)

    def is_ideal(self, members: Iterable[Element]) -> bool:
        members = self.check_members(members)
        return self.down_closure(members) == members

    def is_filter(self, members: Iterable[Element]) -> bool:
        members = self.check_members(members)
        return self.up_closure(members) == members

    # ==================== 極小 / 極大 / antichain ====================

    def min_elements(self, members: Iterable[Element]) -> ElementSet:
        mask = self._mask(members)
        # x 是極小元 ⇔ S 中沒有 y < x
        has_smaller = self.lt[mask, :].any(axis=0) if mask.any() else mask
        return self._from_mask(mask & ~has_smaller)

    def max_elements(self, members: Iterable[Element]) -> ElementSet:
        mask = self._mask(members)
        has_larger = self.lt[:, mask].any(axis=1) if mask.any() else mask
        return self._from_mask(mask & ~has_larger)

    def minimal(self) -> ElementSet:
        return self.min_elements(self.elements)

    def maximal(self) -> ElementSet:
        return self.max_elements(self.elements)

    def is_antichain(self, members: Iterable[Element]) -> bool:
        mask = self._mask(members)
        return not self.lt[np.ix_(mask, mask)].any()

    def is_chain(self, members: Iterable[Element]) -> bool:
        items = sorted(self.check_members(members))
        return all(self.comparable(a, b) for i, a in enumerate(items) for b in items[i + 1:])

    def is_antichain_poset(self) -> bool:
        return not self.lt.any()

    def is_total_order(self) -> bool:
        return self.is_chain(self.elements)

    def height(self) -> int:
        """最長鏈的元素個數（空 poset 為 0）"""
        n = len(self.elements)
        if n == 0:
            return 0
        # 依「下方元素個數」排序即為一個拓撲序
        order = np.argsort(self.lt.sum(axis=0), kind='stable')
        level = np.ones(n, dtype=int)
        for j in order:
            below = np.flatnonzero(self.lt[:, j])
            if below.size:
                level[j] = level[below].max() + 1
        return int(level.max())

    # ==================== 子序 ====================

    def induced_subposet(self, members: Iterable[Element]) -> 'Poset':
        members = self.check_members(members)
        kept = [x for x in self.elements if x in members]
        idx = [self._index[x] for x in kept]
        return Poset(kept, self.lt[np.ix_(idx, idx)])

    # ==================== ideal 列舉（oracle 用） ====================

    def _bits(self) -> List[int]:
        if self._down_bits is None:
            bits = []
            for j in range(len(self.elements)):
                b = 0
                for i in np.flatnonzero(self.lt[:, j]):
                    b |= 1 << int(i)
                bits.append(b)
            self._down_bits = bits
        return self._down_bits

    def enumerate_ideals(self, cap: int = 20) -> Iterator[ElementSet]:
        """
        依標準形式的字典序逐一產生所有 ideal（每個恰好一次）

        深度優先走訪排序後的 token；前綴 S 只有在「↓S 中缺少的元素都排在後面」
        時才可能延伸成 ideal，其餘分支直接剪掉。

        Raises:
            OracleCapExceeded: 元素數超過 cap
        """
        n = len(self.elements)
        if n > cap:
            raise OracleCapExceeded(f"poset 有 {n} 個元素，超過 oracle 上限 {cap}")
        order = sorted(range(n), key=lambda i: self.elements[i])
        down_bits = self._bits()
        prefix_mask = []
        acc = 0
        for i in order:
            acc |= 1 << i
            prefix_mask.append(acc)

        def _walk(start: int, chosen: int, needed: int) -> Iterator[int]:
            if needed & ~chosen == 0:
                yield chosen
            for p in range(start, n):
                i = order[p]
                new_chosen = chosen | (1 << i)
                new_needed = needed | down_bits[i]
                if (new_needed & ~new_chosen) & prefix_mask[p] == 0:
                    yield from _walk(p + 1, new_chosen, new_needed)

        for bits in _walk(0, 0, 0):
            yield frozenset(self.elements[i] for i in range(n) if bits >> i & 1)

    def count_ideals(self, cap: int = 20) -> int:
        return sum(1 for _ in self.enumerate_ideals(cap))


def build_poset(elements: Sequence[Element], relations: Iterable[Tuple[Element, Element]]) -> Poset:
    """
    由元素清單與 DAG 邊（a < b）建立 poset，永遠計算遞移閉包

    Raises:
        UnknownElement: 邊的端點沒有宣告
        CycleError: 閉包違反反對稱性（含 a < a）
    """
    elements = list(elements)
    for x in elements:
        if not isinstance(x, str) or not x:
            raise UnknownElement(f"元素必須是非空字串: {x!r}")
    if len(set(elements)) != len(elements):
        dup = sorted({x for x in elements if elements.count(x) > 1})
        raise UnknownElement(f"元素重複宣告: {' '.join(dup)}")

    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    lt = np.zeros((n, n), dtype=bool)
    for a, b in relations:
        for end in (a, b):
            if end not in index:
                raise UnknownElement(f"關係端點未宣告: {end!r}")
        lt[index[a], index[b]] = True

    # Warshall 遞移閉包
    for k in range(n):
        lt |= np.outer(lt[:, k], lt[k, :])

    cyclic = np.flatnonzero(np.diag(lt))
    if cyclic.size:
        culprits = sorted(elements[i] for i in cyclic)
        raise CycleError(f"關係含有循環，涉及: {' '.join(culprits)}")

    return Poset(elements, lt)


def antichain_poset(elements: Sequence[Element]) -> Poset:
    return build_poset(elements, [])


def chain_poset(elements: Sequence[Element]) -> Poset:
    """依給定順序的全序"""
    elements = list(elements)
    return build_poset(elements, list(zip(elements, elements[1:])))


def are_dual_antichains(poset: Poset, bplus: Iterable[Element], bminus: Iterable[Element]) -> bool:
    """
    顯式 poset 上的對偶判定：B- = Min(P − ↓B+)

    這裡的 B+、B- 是 poset 元素的 antichain（不是格中的 ideal 族）。
    """
    bplus = poset.check_members(bplus)
    bminus = poset.check_members(bminus)
    if not (poset.is_antichain(bplus) and poset.is_antichain(bminus)):
        return False
    rest = poset.element_set - poset.down_closure(bplus)
    return poset.min_elements(rest) == bminus
