import json

import pytest

import seeds
from config_file import ExitCode, VERSION, settings
from main import build_parser, main
from src.errors import InvalidInputError
from src.poly.text import parse_poly
from src.repository.catalog import resolve


def run(capsys, *argv):
    code = main([*argv, '--json'])
    return code, json.loads(capsys.readouterr().out)


def test_dual_dim_of_the_determinant(capsys):
    code, report = run(capsys, 'dual-dim', '--poly', 'det:3')
    assert code == ExitCode.passed
    assert report['verdict'] == 'PASS'
    assert report['values']['dual_dim'] == 4
    assert report['values']['dual_dim_by_prime'] == {'10007': 4, '32003': 4}
    assert report['version'] == VERSION
    assert report['config']['seed'] == 0


def test_dual_dim_of_a_conic(capsys):
    code, report = run(capsys, 'dual-dim', '--poly', 'x0^2 + x1^2 + x2^2', '--prime', '10007')
    assert code == ExitCode.passed
    assert report['values']['dual_dim'] == 1
    assert report['config']['primes'] == [10007]


def test_table_output(capsys):
    assert main(['dual-dim', '--poly', 'det:3', '--trials', '2']) == ExitCode.passed
    out = capsys.readouterr().out
    assert out.startswith('dual-dim: PASS')
    assert 'dual_dim' in out


def test_check_eqn_permanent_fails(capsys):
    code, report = run(capsys, 'check-eqn', '--poly', 'perm:3', '--k', '6')
    assert code == ExitCode.failed
    assert report['values']['holds'] is False
    assert report['values']['equation_degree'] == 16
    assert report['values']['q_degree'] == 9
    witness = report['witnesses'][0]
    assert len(witness['columns']) == 6 + 3
    assert any(witness['remainder'])


@pytest.mark.parametrize('poly, k', [('det:4', '6'), ('padded:perm:2:3', '2')])
def test_check_eqn_passes(capsys, poly, k):
    code, report = run(capsys, 'check-eqn', '--poly', poly, '--k', k, '--trials', '4')
    assert code == ExitCode.passed
    assert report['values']['holds'] is True
    assert report['witnesses'] == []


def test_check_eqn_needs_a_cubic(capsys):
    assert main(['check-eqn', '--poly', 'x0^2 + x1^2 + x2^2 + x3^2', '--k', '0']) == ExitCode.invalid_input
    assert 'degree' in capsys.readouterr().err


def test_characters(capsys):
    code, report = run(capsys, 'characters', '--classify', '--n', '5')
    assert code == ExitCode.passed
    assert report['values']['partitions'] == ['21^3', '1^5']

    code, report = run(capsys, 'characters', '--lambda', '2,1', '--class', '3')
    assert code == ExitCode.passed
    assert report['values']['character'] == -1
    assert report['values']['dimension'] == 2

    code, report = run(capsys, 'characters', '--cdim', '--n', '4')
    assert code == ExitCode.passed
    assert report['values']['class_function_space_dim'] == 2


def test_character_table(capsys):
    code, report = run(capsys, 'characters', '--n', '3')
    assert code == ExitCode.passed
    assert report['values']['table']['21'] == {'3': -1, '21': 0, '1^3': 2}


def test_characters_need_a_size(capsys):
    assert main(['characters', '--classify']) == ExitCode.invalid_input
    assert main(['characters', '--n', '4', '--lambda', '2,1']) == ExitCode.invalid_input


@pytest.mark.parametrize('argv, key, expected', [
    (['--check', 'dcbound', '--poly', 'perm:3'], 'bound', 4),
    (['--check', 'dcbound', '--poly', 'perm:2'], 'bound', 2),
    (['--check', 'dcbound', '--poly', 'det:3'], 'bound', 3),
    (['--check', 'stabilizer', '--poly', 'plambda:3'], 'stabilizer_dim', 18),
    (['--check', 'stabilizer', '--poly', 'det:3'], 'stabilizer_dim', 17),
    (['--check', 'curve', '--n', '3'], 'scalar', '3'),
    (['--check', 'concise', '--n', '3'], 'essential_vars', 9),
    (['--check', 'katz-lambda', '--n', '3'], 'dual_dim_by_prime', {'10007': 4, '32003': 4}),
    (['--check', 'kernel', '--n', '3', '--trials', '3'], 'ranks', [6, 6, 6]),
    (['--check', 'padded', '--poly', 'perm:2', '--d', '4'], 'padded_dims', [2, 2]),
    (['--check', 'subvariety', '--k', '1', '--d', '3', '--nvars', '5'], 'empirical', 15),
])
def test_gct_checks_pass(capsys, argv, key, expected):
    code, report = run(capsys, 'gct', *argv)
    assert code == ExitCode.passed
    assert report['values'][key] == expected


def test_gct_subvariety_reports_both_formulas(capsys):
    _, report = run(capsys, 'gct', '--check', 'subvariety', '--k', '1', '--d', '3', '--nvars', '5')
    assert report['values']['section_formula'] == 8
    assert report['values']['binomial_formula'] == 15


def test_gct_dual_weight_warns(capsys):
    code, report = run(capsys, 'gct', '--check', 'dual-weight', '--n', '3')
    assert code == ExitCode.passed
    assert report['values']['omega']['degree'] == 12
    assert report['values']['stated']['degree'] == 6
    assert report['warnings']


def test_gct_tangent(capsys):
    code, report = run(capsys, 'gct', '--check', 'tangent', '--trials', '4')
    assert code == ExitCode.passed
    assert report['values']['passed_trials'] == 4
    ratios = report['values']['ratios']
    assert ratios[0] == ratios[1]

    code, report = run(capsys, 'gct', '--check', 'tangent', '--poly', 'perm:3', '--trials', '4')
    assert code == ExitCode.failed
    witness = report['witnesses'][0]
    assert len(witness['point']) == len(witness['direction']) == 9
    assert witness['value'] != 0


def test_gct_needs_its_arguments(capsys):
    assert main(['gct', '--check', 'dcbound']) == ExitCode.invalid_input
    assert main(['gct', '--check', 'padded', '--poly', 'perm:2']) == ExitCode.invalid_input
    assert main(['gct', '--check', 'curve', '--n', '4']) == ExitCode.invalid_input


def test_parse_errors_exit_with_two(capsys):
    assert main(['dual-dim', '--poly', 'x0 + * x1']) == ExitCode.parse_error
    assert 'line 1' in capsys.readouterr().err


def test_usage_errors_exit_with_two():
    with pytest.raises(SystemExit) as error:
        main(['gct', '--check', 'nope'])
    assert error.value.code == 2


@pytest.mark.parametrize('argv', [
    ['check-eqn', '--poly', 'det:3', '--k', '10'],
    ['dual-dim', '--poly', 'det:x'],
    ['dual-dim', '--poly', 'det:3', '--prime', '10007', '--prime', '10007'],
    ['dual-dim', '--poly', 'det:3', '--trials', '0'],
])
def test_invalid_input_exits_with_four(argv):
    assert main(argv) == ExitCode.invalid_input


def test_unlucky_prime_moves_to_the_next_prime(capsys):
    code, report = run(capsys, 'dual-dim', '--poly', '10007*x0^2 + 10007*x1^2', '--prime', '10007')
    assert code == ExitCode.passed
    assert report['values']['primes_used'] == [10009]
    assert report['values']['dual_dim_by_prime'] == {'10009': 0}
    assert report['config']['primes'] == [10007]
    assert any('10007' in warning and '10009' in warning for warning in report['warnings'])


def test_sampling_exhausted_exits_with_three(monkeypatch):
    monkeypatch.setattr(settings, 'sampling_retries', 4)
    # no line through a random point of the plane meets the anisotropic conic x0^2 + x1^2 mod 10007
    code = main(['dual-dim', '--poly', 'x0^2 + x1^2', '--prime', '10007'])
    assert code == ExitCode.sampling_exhausted


def test_unlucky_primes_give_up_after_the_retries(monkeypatch):
    monkeypatch.setattr(settings, 'prime_retries', 0)
    code = main(['dual-dim', '--poly', '10007*x0^2 + x1^2', '--prime', '10007'])
    assert code == ExitCode.sampling_exhausted


def test_reports_are_reproducible():
    args = build_parser().parse_args(['check-eqn', '--poly', 'perm:3', '--k', '6', '--seed', '5', '--trials', '2'])
    first, second = args.handler(args), args.handler(args)
    assert first.stable_json() == second.stable_json()
    assert 'timing' not in json.loads(first.stable_json())


def test_report_file(capsys, tmp_path):
    path = tmp_path / 'report.json'
    assert main(['characters', '--cdim', '--n', '4', '--output', str(path)]) == ExitCode.passed
    report = json.loads(path.read_text(encoding='utf-8'))
    assert report['command'] == 'characters'
    assert report['config']['output'] == str(path)
    assert capsys.readouterr().out.startswith('characters: PASS')


def test_repeated_factor_warning(capsys):
    _, report = run(capsys, 'dual-dim', '--poly', 'x0^2*x3^2 + 2*x0*x1*x2*x3 + x1^2*x2^2', '--trials', '2')
    assert any('repeated factor' in warning for warning in report['warnings'])


def test_catalog_files_with_comments(tmp_path):
    path = tmp_path / 'quadric.poly'
    path.write_text("# a quadric\nx0*x1 - x2*x3  # rank four\n", encoding='utf-8')
    assert resolve(str(path)).poly == parse_poly("x0*x1 - x2*x3")


def test_catalog_names():
    assert resolve('det:2').matrix_size == 2
    assert resolve('immanant:2,1').poly.nvars == 9
    assert resolve('cone:2:3:5:1').poly.nvars == 5
    with pytest.raises(InvalidInputError):
        resolve('padded:det:2:3')
    with pytest.raises(InvalidInputError):
        resolve('cone:6:3:5:1')
    with pytest.raises(InvalidInputError):
        resolve('perm:2:3')


def test_seeds_fill_the_catalog(monkeypatch, tmp_path):
    monkeypatch.setattr(settings, 'catalog_dir', tmp_path)
    seeds.main()
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(seeds.SAMPLES)
    assert resolve('conic.poly').poly == parse_poly("x0^2 + x1^2 + x2^2")
    assert resolve('det3.poly').poly == resolve('det:3').poly
