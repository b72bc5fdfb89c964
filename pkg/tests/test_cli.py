import json

import pytest

from ordered_hamming.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_shapes_command(capsys):
    code, payload = run_cli(capsys, "shapes", "--q", "2,2", "--n", "2", "--json")
    assert code == 0
    assert payload["data"]["shapes"] == [
        [2, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 2, 0],
        [0, 1, 1],
        [0, 0, 2],
    ]


def test_shapes_rejects_small_alphabet():
    with pytest.raises(SystemExit) as exc:
        main(["shapes", "--q", "1,2", "--n", "2"])
    assert exc.value.code == 2


def test_scheme_verify_command(capsys):
    code, payload = run_cli(capsys, "scheme-verify", "--q", "3", "--n", "1", "--json")
    assert code == 0
    assert payload["checks"]["R4_constants_well_defined"] is True
    rows = payload["data"]["intersection_numbers"]
    assert {"i": [0, 1], "j": [0, 1], "k": [0, 1], "p": 1} in rows


def test_adjacency_command_cross_checks(capsys):
    code, payload = run_cli(
        capsys, "adjacency", "--q", "2,2", "--n", "2", "--shape", "1,1,0", "--json"
    )
    assert code == 0
    assert payload["checks"]["matches_relation_matrix"] is True
    assert payload["data"]["valency"] == 2
    assert payload["data"]["matrix"]["rows"] == 16


def test_adjacency_size_bound_exit(capsys):
    code = main(
        ["adjacency", "--q", "2,2", "--n", "2", "--shape", "1,1,0", "--max-points", "4", "--json"]
    )
    assert code == 2


def test_eigenmatrix_command(capsys):
    code, payload = run_cli(capsys, "eigenmatrix", "--q", "2", "--n", "2", "--which", "P", "--json")
    assert code == 0
    assert payload["data"]["matrix"]["entries"] == [
        ["1", "2", "1"],
        ["1", "0", "-1"],
        ["1", "-2", "1"],
    ]
    assert payload["checks"]["pq_product_is_size_identity"] is True


def test_krawchouk_command(capsys):
    code, payload = run_cli(capsys, "krawchouk", "--q", "2", "--n", "2", "--json")
    assert code == 0
    assert payload["data"]["table"] == [["1", "2", "1"], ["1", "0", "-1"], ["1", "-2", "1"]]


def test_theta_command(capsys):
    code, payload = run_cli(
        capsys, "theta", "--q", "2,3", "--n", "2", "--lambda", "0,2", "--mu", "1,1", "--json"
    )
    assert code == 0
    assert payload["data"]["feasible"] is True
    assert payload["data"]["matrices"] == [[[0, 0], [1, 1]]]


def test_theta_rejects_bad_shape():
    with pytest.raises(SystemExit) as exc:
        main(["theta", "--q", "2,3", "--n", "2", "--lambda", "0,1", "--mu", "1,1"])
    assert exc.value.code == 2


def test_omega_command(capsys):
    code, payload = run_cli(capsys, "omega", "--q", "2,3", "--n", "2", "--json")
    assert code == 0
    assert payload["data"]["size"] == 3
    assert payload["data"]["multiset_binomial"] == 3
    assert payload["data"]["lambda_size"] == 2


def test_identities_command(capsys):
    code, payload = run_cli(capsys, "identities", "--q", "3", "--n", "1", "--json")
    assert code == 0
    assert payload["checks"]["g_products_by_regime"] is True


def test_closure_command(capsys):
    code, payload = run_cli(capsys, "closure", "--q", "3", "--n", "1", "--json")
    assert code == 0
    assert payload["data"]["dimension"] == 5


def test_report_default_tolerates_disagreements(capsys):
    code, payload = run_cli(capsys, "report", "--q", "2", "--n", "2", "--json")
    assert code == 0
    assert payload["data"]["dim_T"] == 10
    disagreeing = [p for p in payload["data"]["predictions"] if not p["agrees"]]
    assert disagreeing  # recorded but not fatal


def test_report_strict_fails_on_disagreements(capsys):
    code, payload = run_cli(capsys, "report", "--q", "2", "--n", "2", "--strict", "--json")
    assert code == 1
    assert payload["checks"]["predictions_agree"] is False


def test_single_command_output_is_stable(capsys):
    main(["eigenmatrix", "--q", "2,3", "--n", "1", "--json"])
    first = capsys.readouterr().out
    main(["eigenmatrix", "--q", "2,3", "--n", "1", "--json"])
    second = capsys.readouterr().out
    assert first == second
