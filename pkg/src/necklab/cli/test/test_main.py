import json
import os
import pytest
from necklab import misc as m
from necklab.cli import main as cli
from necklab.cli import suites
from necklab.combinat import liemodules as lm
from necklab.combinat import tables

def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err

def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        cli.main(list(argv))
    capsys.readouterr()
    return info.value.code

def test_kw_table(capsys):
    code, out, _ = run(capsys, 'kw', '--n', '4')
    assert code == 0
    assert 'r=1: (3,1):1 (2,1,1):1' in out.splitlines()
    assert len(out.splitlines()) == 4

def test_schocker_table(capsys):
    code, out, _ = run(capsys, 'schocker', '--a', '2', '--b', '2', '--r', '1', '--kind', 'trivial')
    assert code == 0
    assert '(2,2):1 (1,1,1,1):1' in out

def test_kw_json_round_trip(capsys):
    code, out, _ = run(capsys, 'kw', '--n', '3', '--format', 'json')
    assert code == 0
    text = out.strip()
    document = json.loads(text)
    assert json.dumps(document) == text
    assert document['command'] == 'kw'
    assert document['params'] == {'n': 3}
    assert document['series'][0] == {'index': 1, 'schur': {'[2,1]': 1}}
    assert list(document['series'][2]['schur']) == ['[3]', '[1,1,1]']

def test_stembridge_json(capsys):
    code, out, _ = run(capsys, 'stembridge', '--nu', '2,1', '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert document['params'] == {'nu': [2, 1]}
    assert [entry['index'] for entry in document['series']] == [1, 2]

def test_wreath_single_and_all(capsys):
    code, out, _ = run(capsys, 'wreath', '--a', '2', '--b', '1', '--ul', '[[],[1]]')
    assert code == 0
    assert out.strip() == '((),(1)): (2):1 [dimension=1]'
    code, out, _ = run(capsys, 'wreath', '--a', '2', '--b', '2', '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert len(document['series']) == 5
    assert document['series'][0]['index'] == [[2], []]

def test_lie(capsys):
    code, out, _ = run(capsys, 'lie', '--shape', '2,1')
    assert code == 0
    assert out.strip() == '(2,1): (2,1):1 (1,1,1):1'

def test_csp(capsys):
    code, out, _ = run(capsys, 'csp', '--alpha', '2,1,1', '--stat', 'flex')
    assert code == 0
    assert 'holds: True' in out
    code, out, _ = run(capsys, 'csp', '--alpha', '1,1', '--format', 'json')
    document = json.loads(out)
    assert document['holds'] is True
    assert document['orbit_profile'] == {'2': 1}
    assert document['witness'] is None

def test_usage_errors(capsys):
    assert usage_error(capsys, 'kw', '--n', '11') == 2
    assert usage_error(capsys, 'kw', '--n', '0') == 2
    assert usage_error(capsys, 'kw') == 2
    assert usage_error(capsys, 'stembridge', '--nu', '1,2') == 2
    assert usage_error(capsys, 'schocker', '--a', '3', '--b', '3', '--r', '1') == 2
    assert usage_error(capsys, 'verify', '--max-n', '11') == 2
    assert usage_error(capsys, 'verify', '--suite', 'nope') == 2
    assert usage_error(capsys, 'wreath', '--a', '2', '--b', '1', '--ul', '[[1],2]') == 2

def test_precondition_failure_is_usage_error(capsys):
    code, _, err = run(capsys, 'schocker', '--a', '2', '--b', '2', '--r', '3')
    assert code == 2
    assert 'error' in err
    code, _, _ = run(capsys, 'wreath', '--a', '2', '--b', '2', '--ul', '[[1],[]]')
    assert code == 2

def test_verify_suite(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'mash', '--max-n', '4')
    assert code == 0
    assert 'ok' in out and 'FAILED' not in out

def test_verify_json(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'kernel', '--max-n', '3', '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert all(report['holds'] for report in document['reports'])
    assert json.dumps(document) == out.strip()

def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(config):
        report = lm.VerificationReport('broken identity')
        report.record(False, (4, 1))
        return [report]
    monkeypatch.setitem(suites.SUITES, 'kernel', broken)
    code, out, err = run(capsys, 'verify', '--suite', 'kernel')
    assert code == 1
    assert 'FAILED' in out
    assert '(4, 1)' in err

def test_verify_error_exit_code(capsys, monkeypatch):
    def raising(config):
        raise m.VerificationError('routes differ', ('nu', 1))
    monkeypatch.setitem(suites.SUITES, 'kernel', raising)
    code, _, err = run(capsys, 'verify', '--suite', 'kernel')
    assert code == 1
    assert "('nu', 1)" in err

def test_verify_csp_sizes_clamped(capsys, monkeypatch):
    seen = []
    def fake_compositions(n):
        seen.append(n)
        return []
    monkeypatch.setattr(suites, 'compositions', fake_compositions)
    monkeypatch.setattr(suites.csp, 'random_rotation_closed_set', lambda *args, **kwargs: [])
    code, out, _ = run(capsys, 'verify', '--suite', 'csp', '--max-n', '10')
    assert code == 0, out
    assert seen == list(range(1, 9))

def test_verify_kw_sizes_clamped(capsys, monkeypatch):
    seen = []
    def fake_series(n):
        seen.append(n)
        return {r: 0 for r in range(1, n + 1)}
    monkeypatch.setattr(lm, 'kw_series', fake_series)
    monkeypatch.setattr(lm, 'kw_oracle', lambda n: {r: 0 for r in range(1, n + 1)})
    monkeypatch.setattr(lm, 'check_kw_series', lambda n, verbose=False: lm.VerificationReport('kw'))
    code, out, _ = run(capsys, 'verify', '--suite', 'kw', '--max-n', '10')
    assert code == 0, out
    assert seen == list(range(1, 9))

def test_verify_all(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'all', '--max-n', '6')
    assert code == 0, out
    assert 'FAILED' not in out

def test_cache_dir_flag(capsys, tmp_path):
    tables.clearMemory()
    try:
        code, _, _ = run(capsys, 'wreath', '--a', '2', '--b', '1', '--ul', '[[],[1]]', '--cache-dir', str(tmp_path))
        assert code == 0
        assert os.path.isfile(os.path.join(str(tmp_path), 'tables_deg2.h5'))
    finally:
        tables.setCacheDir(None)
        tables.clearMemory()

def test_compositions():
    assert list(suites.compositions(3)) == [(3,), (2,1), (1,2), (1,1,1)]
    assert len(list(suites.compositions(5))) == 16

def test_run_config_caps():
    with pytest.raises(ValueError):
        cli.RunConfig('verify', max_n=11)
    with pytest.raises(ValueError):
        cli.RunConfig('kw', format='xml')
