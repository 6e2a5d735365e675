# tests/helpers.py
"""測試共用工具：fixture 路徑與集合族簡寫"""

import os

from core.formats import read_family, read_graph, read_hypergraph, read_poset
from core.poset import SetFamily

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, 'data', 'fixtures')


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def family(*members: str) -> SetFamily:
    """family("a b", "c") → {{a, b}, {c}}；空字串代表空集合"""
    return SetFamily.of(m.split() for m in members)


def load_poset(name: str):
    return read_poset(fixture_path(name))


def load_graph(name: str):
    return read_graph(fixture_path(name))


def load_hypergraph(name: str):
    return read_hypergraph(fixture_path(name))


def load_family(name: str):
    return read_family(fixture_path(name))
