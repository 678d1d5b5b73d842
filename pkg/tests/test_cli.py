import json

import pytest
from click.testing import CliRunner

from soltes import __version__
from soltes.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def construct(runner, tmp_path, name, *args):
    path = tmp_path / name
    result = runner.invoke(main, ['construct', *args, '-o', str(path)])
    assert result.exit_code == 0, result.output
    return path


def test_version(runner):
    result = runner.invoke(main, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_check_irregular_example(runner, tmp_path):
    path = construct(runner, tmp_path, 'irregular.hg', '--variant', 'irregular54')
    result = runner.invoke(main, ['check', str(path), '--format', 'json', '--expect', 'soltes'])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['verdict'] is True
    assert report['wiener'] == 2349
    assert {v['wiener_after'] for v in report['vertices']} == {2349}


def test_constructed_cycle_through_standard_input(runner, tmp_path):
    path = construct(runner, tmp_path, 'cycle', '--variant', 'cycle', '--n', '11')
    result = runner.invoke(main, ['check', '-'], input=path.read_text())
    assert result.exit_code == 0, result.output
    assert 'verdict: Šoltés' in result.output


def test_expectation_mismatch(runner, tmp_path):
    path = construct(runner, tmp_path, 'c10.hg', '--variant', 'cycle', '--n', '10')
    result = runner.invoke(main, ['check', str(path), '--expect', 'soltes'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['check', str(path), '--expect', 'not-soltes'])
    assert result.exit_code == 0


def test_check_weighted_graph(runner, tmp_path):
    path = construct(runner, tmp_path, 'alternating', '--variant', 'alternating-cycle')
    result = runner.invoke(main, ['check', '-', '--format', 'json'], input=path.read_text())
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['wiener'] == 60

    result = runner.invoke(main, ['check', '--kind', 'hg', '-'], input=path.read_text())
    assert result.exit_code == 2


def test_report_to_file(runner, tmp_path):
    path = construct(runner, tmp_path, 'c11.hg', '--variant', 'cycle', '--n', '11')
    out = tmp_path / 'report.json'
    result = runner.invoke(main, ['check', str(path), '--format', 'json', '-o', str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())['verdict'] is True


def test_wiener_of_a_disconnected_hypergraph(runner, tmp_path):
    path = tmp_path / 'split.hg'
    path.write_text('4 2\n0 1\n2 3\n')
    result = runner.invoke(main, ['wiener', str(path)])
    assert result.exit_code == 0
    assert 'W = inf' in result.output

    result = runner.invoke(main, ['wiener', str(path), '--format', 'json'])
    assert json.loads(result.output)['wiener'] == 'inf'


def test_wiener_of_a_weighted_graph(runner):
    text = '# weighted graph\n3 3\n0 1 1/2\n1 2 1/3\n0 2 1\n'
    result = runner.invoke(main, ['wiener', '-', '--format', 'json'], input=text)
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['wiener'] == '5/3'


def test_text_report_of_a_weighted_graph(runner):
    text = '# weighted graph\n3 3\n0 1 1/2\n1 2 1/3\n0 2 1\n'
    result = runner.invoke(main, ['wiener', '-'], input=text)
    assert result.exit_code == 0, result.output
    assert 'W = 5/3' in result.output

    result = runner.invoke(main, ['check', '-'], input=text)
    assert result.exit_code == 0, result.output
    assert 'W = 5/3' in result.output
    assert '       5/6' in result.output
    assert 'verdict:' in result.output


def test_bad_input(runner, tmp_path):
    path = tmp_path / 'bad.hg'
    path.write_text('3 2\n0 1 2\n')
    result = runner.invoke(main, ['check', str(path)])
    assert result.exit_code == 2
    assert 'PARSE_ERROR' in result.output

    result = runner.invoke(main, ['check', str(tmp_path / 'missing.hg')])
    assert result.exit_code == 2


def test_construct_rejects_bad_parameters(runner):
    assert runner.invoke(main, ['construct', '--variant', 'knits', '--n', '50']).exit_code == 2
    assert runner.invoke(main, ['construct', '--variant', 'prism']).exit_code == 2
    assert runner.invoke(main, ['construct']).exit_code == 2


def test_construct_prism(runner, tmp_path):
    path = construct(runner, tmp_path, 'prism.wg', '--variant', 'prism', '--k', '20')
    lines = path.read_text().splitlines()
    assert lines[0] == '# weighted graph'
    assert lines[1] == '80 120'


def test_search(runner, tmp_path):
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'n': 5, 'k': 2, 'm_min': 1}))
    out = tmp_path / 'records.ndjson'
    export = tmp_path / 'witnesses'

    result = runner.invoke(
        main, ['search', str(spec), '-o', str(out), '--export', str(export), '--workers', '1']
    )
    assert result.exit_code == 0, result.output
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert records == [records[-1]]
    assert records[-1]['classes_visited'] == 21
    assert records[-1]['status'] == 'COMPLETE'
    assert export.is_dir()


def test_search_rejects_unknown_fields(runner, tmp_path):
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'n': 5, 'k': 2, 'depth': 3}))
    assert runner.invoke(main, ['search', str(spec)]).exit_code == 2


def test_lemmas(runner):
    result = runner.invoke(main, ['lemmas', '--samples', '20', '--seed', '3', '--format', 'json'])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['ok'] is True


def test_verify_paper_subset(runner):
    result = runner.invoke(main, ['verify-paper', '--only', 'irregular-54', '--only', 'cycle-11'])
    assert result.exit_code == 0, result.output
    assert 'irregular-54' in result.output
    assert 'cycle-11' in result.output

    result = runner.invoke(main, ['verify-paper', '--only', 'no-such-check'])
    assert result.exit_code == 2
