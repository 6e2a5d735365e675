# tests/test_cli.py
import os

import pytest

from main import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main
from tests.helpers import fixture_path as fx


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


class TestSolve:

    def test_dualize(self, capsys):
        code, out, _ = run(capsys, 'dualize', '--poset', fx('fig2_poset.txt'), '--bplus', fx('fig2_bplus.txt'))
        assert code == EXIT_OK
        assert out == ["set: x1 x2 x3", "set: x1 x2 x4", "count: 2"]

    def test_dualize_oracle_matches(self, capsys):
        _, generic, _ = run(capsys, 'dualize', '--poset', fx('fig2_poset.txt'), '--bplus', fx('fig2_bplus.txt'))
        _, oracle, _ = run(capsys, 'dualize', '--poset', fx('fig2_poset.txt'), '--bplus', fx('fig2_bplus.txt'),
                           '--solver', 'oracle')
        assert generic == oracle

    def test_itrans(self, capsys):
        code, out, _ = run(capsys, 'itrans', '--hypergraph', fx('fig1_hypergraph.txt'),
                           '--poset', fx('fig3_poset.txt'))
        assert code == EXIT_OK
        assert out == ["set: x2 x3 x5", "set: x2 x3 x6", "count: 2"]

    def test_idom_generic_route(self, capsys):
        code, out, _ = run(capsys, 'idom', '--graph', fx('fig4_graph.txt'), '--poset', fx('fig3_poset.txt'))
        assert code == EXIT_OK
        assert out == ["set: x2 x3 x5", "set: x2 x3 x6", "count: 2"]

    def test_idom_split_delay_stats(self, capsys):
        code, out, _ = run(capsys, 'idom', '--graph', fx('split_pendants_graph.txt'),
                           '--poset', fx('split_pendants_poset.txt'), '--delay-stats')
        assert code == EXIT_OK
        assert out == [
            "set: s1 s2",
            "set: c2 s1",
            "count: 2",
            "delay: max=2 mean=1.50 tests=3 emissions=2 bound=5",
        ]

    def test_delay_stats_ignored_off_split(self, capsys):
        code, out, err = run(capsys, 'idom', '--graph', fx('fig4_graph.txt'), '--poset', fx('fig3_poset.txt'),
                             '--delay-stats')
        assert code == EXIT_OK
        assert out[-1] == "count: 2"
        assert '--delay-stats' in err

    def test_idom_trianglefree_dump(self, capsys, tmp_path):
        prefix = str(tmp_path / 'red')
        code, out, _ = run(capsys, 'idom', '--graph', fx('p3_graph.txt'), '--poset', fx('p3_poset.txt'),
                           '--solver', 'trianglefree', '--dump-reduced', '--out', prefix)
        assert code == EXIT_OK
        assert out == ["set: a b", "set: a c", "count: 2"]
        with open(f"{prefix}_contraction.txt", encoding='utf-8') as f:
            assert "a-prime: c" in f.read()
        assert os.path.exists(f"{prefix}_graph.txt")
        assert os.path.exists(f"{prefix}_poset.txt")


class TestCheckAndReduce:

    def test_check_dual_yes(self, capsys):
        code, out, _ = run(capsys, 'check-dual', '--poset', fx('fig2_poset.txt'),
                           '--bplus', fx('fig2_bplus.txt'), '--bminus', fx('fig2_bminus.txt'))
        assert (code, out) == (EXIT_OK, ["dual: yes"])

    def test_check_dual_no(self, capsys):
        code, out, _ = run(capsys, 'check-dual', '--poset', fx('fig2_poset.txt'),
                           '--bplus', fx('fig2_bplus.txt'), '--bminus', fx('fig2_bplus.txt'))
        assert (code, out) == (EXIT_NEGATIVE, ["dual: no"])

    def test_reduce(self, capsys, tmp_path):
        prefix = str(tmp_path / 'split')
        code, out, _ = run(capsys, 'reduce', '--hypergraph', fx('fig1_hypergraph.txt'),
                           '--poset', fx('fig3_poset.txt'), '--target', 'split', '--out', prefix)
        assert code == EXIT_OK
        assert out == [f"wrote: {prefix}_graph.txt", f"wrote: {prefix}_poset.txt",
                       f"wrote: {prefix}_exceptions.txt"]
        with open(f"{prefix}_exceptions.txt", encoding='utf-8') as f:
            assert f.readline().strip() == "target: split"


class TestGenAndOracle:

    def test_gen_then_dualize(self, capsys, tmp_path):
        prefix = str(tmp_path / 'inst')
        code, out, _ = run(capsys, 'gen', '--kind', 'dual', '--n', '6', '--m', '3', '--seed', '7', '--out', prefix)
        assert code == EXIT_OK
        assert out == [f"wrote: {prefix}_poset.txt", f"wrote: {prefix}_bplus.txt"]

        args = ['dualize', '--poset', f"{prefix}_poset.txt", '--bplus', f"{prefix}_bplus.txt"]
        code, generic, _ = run(capsys, *args)
        assert code == EXIT_OK
        _, oracle, _ = run(capsys, *args, '--solver', 'oracle')
        assert generic == oracle

    def test_oracle_transversals(self, capsys):
        code, out, _ = run(capsys, 'oracle', '--problem', 'transversals', '--hypergraph', fx('fig1_hypergraph.txt'))
        assert code == EXIT_OK
        assert out[-1] == "count: 7"

    def test_oracle_missing_input(self, capsys):
        code, out, err = run(capsys, 'oracle', '--problem', 'idom', '--graph', fx('fig4_graph.txt'))
        assert code == EXIT_ERROR
        assert '--poset' in err


class TestErrors:

    def test_ground_mismatch(self, capsys):
        code, out, err = run(capsys, 'itrans', '--hypergraph', fx('fig1_hypergraph.txt'),
                             '--poset', fx('fig2_poset.txt'))
        assert code == EXIT_ERROR
        assert out == []
        assert err.startswith('❌')

    def test_oracle_cap(self, capsys):
        code, _, _ = run(capsys, 'dualize', '--poset', fx('fig2_poset.txt'), '--bplus', fx('fig2_bplus.txt'),
                         '--solver', 'oracle', '--cap', '3')
        assert code == EXIT_ERROR

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, 'dualize', '--poset', str(tmp_path / 'nope.txt'), '--bplus', fx('fig2_bplus.txt'))
        assert code == EXIT_ERROR

    @pytest.mark.parametrize('argv', [
        ['frobnicate'],
        ['itrans', '--hypergraph', 'h.txt', '--poset', 'p.txt', '--solver', 'split'],
        ['gen', '--kind', 'lattice', '--n', '3'],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == EXIT_ERROR
