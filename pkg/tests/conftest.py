# tests/conftest.py
import logging

import pytest
from hypothesis import HealthCheck, settings

from core.dualize import DualInstance, ITransInstance
from tests.helpers import load_family, load_graph, load_hypergraph, load_poset

settings.register_profile(
    'lattice',
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('lattice')


@pytest.fixture
def fig2_instance():
    return DualInstance(load_poset('fig2_poset.txt'), load_family('fig2_bplus.txt'))


@pytest.fixture
def fig2_bminus():
    return load_family('fig2_bminus.txt')


@pytest.fixture
def fig3_instance():
    return ITransInstance(load_hypergraph('fig1_hypergraph.txt'), load_poset('fig3_poset.txt'))


@pytest.fixture
def fig4_instance():
    return load_graph('fig4_graph.txt'), load_poset('fig3_poset.txt')


@pytest.fixture
def split_pendants():
    return load_graph('split_pendants_graph.txt'), load_poset('split_pendants_poset.txt')


@pytest.fixture
def p3():
    return load_graph('p3_graph.txt'), load_poset('p3_poset.txt')


@pytest.fixture(autouse=True)
def reset_cli_loggers():
    """main() 會替 core / solvers / main 加上 handler 並關閉 propagate，每個測試後還原"""
    yield
    for name in ('core', 'solvers', 'main'):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        logger.propagate = True
        logger.setLevel(logging.NOTSET)
