# core/formats.py
"""
文字格式的讀寫

格式（UTF-8、逐行、`#` 之後為註解、行的順序無關）：
- poset：     `elements: t1 t2 ...`，加上任意多行 `less: a b`（a < b）
- hypergraph：`vertices: t1 t2 ...`，加上 `edge: a b c`
- graph：     `vertices: t1 t2 ...`，加上 `edge: u v`
- 集合族：    每個成員一行 `set: a b c`（空集合寫成 `set:`）

底線開頭的 token 保留給歸約的輔助頂點，使用者輸入中一律拒絕。
"""

import logging
import os
from typing import Dict, Iterable, List, Optional, Tuple

from core.errors import ParseError, ReservedToken
from core.graph import Graph
from core.hypergraph import Hypergraph
from core.poset import Element, ElementSet, Poset, SetFamily, build_poset, canonical

logger = logging.getLogger(__name__)

RESERVED_PREFIX = '_'

Line = Tuple[int, str, List[str]]


def _tokenize(text: str, source: Optional[str], allowed: Iterable[str], allow_reserved: bool) -> List[Line]:
    """切成 (行號, 關鍵字, tokens)，順便擋掉保留 token 與未知關鍵字"""
    allowed = set(allowed)
    parsed: List[Line] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0].strip()
        if not body:
            continue
        if ':' not in body:
            raise ParseError(f"缺少關鍵字: {body!r}", line_no, source)
        keyword, rest = body.split(':', 1)
        keyword = keyword.strip()
        if keyword not in allowed:
            raise ParseError(f"未知關鍵字 {keyword!r}（可用：{', '.join(sorted(allowed))}）", line_no, source)
        tokens = rest.split()
        if not allow_reserved:
            reserved = [t for t in tokens if t.startswith(RESERVED_PREFIX)]
            if reserved:
                where = f"{source}:{line_no}" if source else f"line {line_no}"
                raise ReservedToken(f"{where}: 底線開頭的 token 為保留字: {' '.join(reserved)}")
        parsed.append((line_no, keyword, tokens))
    return parsed


def _declaration(lines: List[Line], keyword: str, source: Optional[str]) -> List[Element]:
    declared = [(no, tokens) for no, kw, tokens in lines if kw == keyword]
    if not declared:
        raise ParseError(f"缺少 `{keyword}:` 宣告行", None, source)
    if len(declared) > 1:
        raise ParseError(f"`{keyword}:` 宣告了不只一次", declared[1][0], source)
    line_no, tokens = declared[0]
    seen = set()
    for t in tokens:
        if t in seen:
            raise ParseError(f"重複宣告的 token: {t}", line_no, source)
        seen.add(t)
    return tokens


def _check_known(tokens: List[str], known: set, line_no: int, source: Optional[str]) -> None:
    unknown = [t for t in tokens if t not in known]
    if unknown:
        raise ParseError(f"未宣告的 token: {' '.join(unknown)}", line_no, source)


# ==================== 解析 ====================

def parse_poset(text: str, source: Optional[str] = None, allow_reserved: bool = False) -> Poset:
    """
    Raises:
        ParseError: 格式錯誤（附行號）
        ReservedToken: 底線開頭的 token
        CycleError: 關係含循環
    """
    lines = _tokenize(text, source, ('elements', 'less'), allow_reserved)
    elements = _declaration(lines, 'elements', source)
    known = set(elements)
    relations = []
    for line_no, keyword, tokens in lines:
        if keyword != 'less':
            continue
        if len(tokens) != 2:
            raise ParseError(f"`less:` 需要恰好兩個 token，得到 {len(tokens)} 個", line_no, source)
        _check_known(tokens, known, line_no, source)
        relations.append((tokens[0], tokens[1]))
    return build_poset(elements, relations)


def parse_hypergraph(text: str, source: Optional[str] = None, allow_reserved: bool = False) -> Hypergraph:
    """重複的超邊合併為一條並記錄警告"""
    lines = _tokenize(text, source, ('vertices', 'edge'), allow_reserved)
    vertices = _declaration(lines, 'vertices', source)
    known = set(vertices)
    edges: Dict[ElementSet, int] = {}
    for line_no, keyword, tokens in lines:
        if keyword != 'edge':
            continue
        if not tokens:
            raise ParseError("超邊不可為空", line_no, source)
        _check_known(tokens, known, line_no, source)
        edge = frozenset(tokens)
        if edge in edges:
            logger.warning(f"⚠️ 重複的超邊 {{{' '.join(canonical(edge))}}}（第 {line_no} 行，"
                           f"首次出現於第 {edges[edge]} 行），已合併")
            continue
        edges[edge] = line_no
    return Hypergraph(vertices, edges.keys())


def parse_graph(text: str, source: Optional[str] = None, allow_reserved: bool = False) -> Graph:
    lines = _tokenize(text, source, ('vertices', 'edge'), allow_reserved)
    vertices = _declaration(lines, 'vertices', source)
    known = set(vertices)
    edges = []
    for line_no, keyword, tokens in lines:
        if keyword != 'edge':
            continue
        if len(tokens) != 2:
            raise ParseError(f"`edge:` 需要恰好兩個端點，得到 {len(tokens)} 個", line_no, source)
        _check_known(tokens, known, line_no, source)
        if tokens[0] == tokens[1]:
            raise ParseError(f"不允許自環: {tokens[0]}", line_no, source)
        edges.append((tokens[0], tokens[1]))
    return Graph(vertices, edges)


def parse_family(text: str, source: Optional[str] = None, allow_reserved: bool = False) -> SetFamily:
    """`set:` 行組成的集合族（是否為 ideal 由呼叫端依 poset 驗證）"""
    lines = _tokenize(text, source, ('set',), allow_reserved)
    return SetFamily.of(tokens for _, _, tokens in lines)


def _read(path: str) -> str:
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def read_poset(path: str) -> Poset:
    return parse_poset(_read(path), source=path)


def read_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(_read(path), source=path)


def read_graph(path: str) -> Graph:
    return parse_graph(_read(path), source=path)


def read_family(path: str) -> SetFamily:
    return parse_family(_read(path), source=path)


# ==================== 輸出 ====================

def format_set(members: Iterable[Element]) -> str:
    tokens = canonical(members)
    return f"set: {' '.join(tokens)}" if tokens else "set:"


def dump_family(family: Iterable[Iterable[Element]]) -> str:
    return ''.join(format_set(m) + '\n' for m in family)


def dump_poset(poset: Poset) -> str:
    """只寫出 Hasse 圖的覆蓋關係（讀回時會重新計算閉包）"""
    out = [f"elements: {' '.join(poset.elements)}"]
    out += [f"less: {a} {b}" for a, b in sorted(poset.covers())]
    return '\n'.join(out) + '\n'


def dump_hypergraph(hypergraph: Hypergraph) -> str:
    out = [f"vertices: {' '.join(hypergraph.ground)}"]
    out += [f"edge: {' '.join(canonical(e))}" for e in hypergraph.sorted_edges()]
    return '\n'.join(out) + '\n'


def dump_graph(graph: Graph) -> str:
    out = [f"vertices: {' '.join(graph.vertices)}"]
    out += [f"edge: {u} {v}" for u, v in graph.edges()]
    return '\n'.join(out) + '\n'


def atomic_write(path: str, text: str) -> None:
    """先寫暫存檔再 os.replace，失敗時清掉暫存檔"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    temp_path = path + ".tmp"
    try:
        with open(temp_path, 'w', encoding='utf-8') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(temp_path, path)
        logger.debug(f"💾 已寫入 {path}")
    except OSError as e:
        logger.error(f"❌ 寫入 {path} 失敗: {e}")
        if os.path.exists(temp_path):
            try:
                os.remove(temp_path)
            except OSError:
                pass
        raise


def write_instance_files(prefix: str, files: Dict[str, str]) -> List[str]:
    """把 {後綴: 內容} 寫成 <prefix>_<後綴>.txt，回傳寫出的路徑"""
    written = []
    for suffix, text in files.items():
        path = f"{prefix}_{suffix}.txt"
        atomic_write(path, text)
        written.append(path)
    return written
