import json

from k3kit.cli import run


def test_usage_error_exit_code(capsys):
    assert run([]) == 2
    assert run(["lattice"]) == 2
    capsys.readouterr()


def test_autnum_table_json(capsys):
    assert run(["autnum", "table", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [(r["p"], r["fixed_points"], r["moduli_dimension"]) for r in rows] == [
        (2, 8, 11), (3, 6, 7), (5, 4, 3), (7, 3, 1)]


def test_lattice_invariants_by_name(capsys):
    assert run(["lattice", "invariants", "--name", "E8", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["det"] == 1 and payload["even"] and payload["rank"] == 8


def test_lattice_lambda_tilde_rejects_odd(capsys):
    assert run(["lattice", "lambda-tilde", "--d", "3"]) == 2
    err = capsys.readouterr().err
    assert "d must be even" in err


def test_lattice_lambda_tilde_even(capsys):
    assert run(["lattice", "lambda-tilde", "--d", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert abs(payload["det"]) == 256 and payload["even"]


def test_lattice_short_vectors(capsys):
    assert run(["lattice", "short-vectors", "--name", "NIKULIN", "--norm", "-2",
                "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 16


def test_lattice_short_vectors_pure_backend(capsys):
    assert run(["lattice", "short-vectors", "--name", "NIKULIN", "--norm", "-2",
                "--pure", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 16 and payload["backend"] == "pure"


def test_lattice_build_and_disc(tmp_path, capsys):
    blob = {"rank": 2, "gram": [[0, 2], [2, 0]]}
    path = tmp_path / "u2.json"
    path.write_text(json.dumps(blob))
    assert run(["lattice", "build", "--input", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["det"] == -4
    assert run(["lattice", "disc", "--input", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["elementary_divisors"] == [2, 2]


def test_lattice_overlattice_cli(tmp_path, capsys):
    path = tmp_path / "u2.json"
    path.write_text(json.dumps({"rank": 2, "gram": [[0, 2], [2, 0]]}))
    assert run(["lattice", "overlattice", "--input", str(path), "--glue", "1/2,0",
                "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lattice"]["det"] == -1
    # odd glue is a domain error, reported on stderr with exit 2
    assert run(["lattice", "overlattice", "--input", str(path), "--glue", "1/2,1/2"]) == 2
    assert "NotIsotropic" in capsys.readouterr().err


def test_lattice_complement_cli(capsys):
    assert run(["lattice", "complement", "--name", "U", "--sub", "1,1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rank"] == 1 and payload["det"] == -2


def test_fibration_analyze_random(capsys):
    assert run(["fibration", "analyze", "--random", "0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["euler_sum"] == 24
    assert payload["shioda_tate_rank"] == 10
    assert payload["generic"] is True
    assert payload["two_torsion_section"] is True
    kinds = sorted({f["kodaira"] for f in payload["fibers"]})
    assert kinds == ["I1", "I2"]


def test_fibration_analyze_input_file(tmp_path, capsys):
    model = {"a": ["0/1"], "b": ["-1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "1/1"]}
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model))
    assert run(["fibration", "analyze", "--input", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert {f["kodaira"] for f in payload["fibers"]} == {"III"}
    assert payload["euler_sum"] == 24


def test_fibration_analyze_requires_source(capsys):
    assert run(["fibration", "analyze"]) == 2
    assert "provide --input or --random" in capsys.readouterr().err


def test_fibration_ns_and_classes(capsys):
    assert run(["fibration", "ns", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["det"] == -64 and payload["rank"] == 10
    assert payload["classes"]["tau"] == ["1", "2", "0", "0", "0", "0", "0", "0", "0", "-1"]
    assert run(["fibration", "classes", "--e", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["self_intersection"] == 12
    assert payload["pairings"]["sigma"] == 2
    assert payload["all_positive"] is True


def test_fibration_split(capsys):
    assert run(["fibration", "split", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["invariant"]["rank"] == 2
    assert abs(payload["anti_invariant"]["det"]) == 256


def test_stablemap_subcommands(capsys):
    assert run(["stablemap", "genus", "--chain-config", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["arithmetic_genus"] == 1
    assert run(["stablemap", "validate", "--chain-config", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True
    assert run(["stablemap", "cohomology", "--chain-config", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["chain_normal_cohomology"] == [1, 0]
    assert run(["stablemap", "cohomology", "--degrees", "0,-1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["oracle"] == [0, 0] and payload["peeling"] == [0, 0]
    assert run(["stablemap", "chain-config", "--e", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["components"]) == 4
    assert payload["components"][0] == {"genus": 1, "kind": "FIBER", "ndeg": 0}


def test_stablemap_config_file(tmp_path, capsys):
    cfg = {"components": [{"genus": 0, "kind": "EMBEDDED_SMOOTH", "ndeg": 0}] * 5,
           "edges": [[i, (i + 1) % 5] for i in range(5)]}
    path = tmp_path / "cycle.json"
    path.write_text(json.dumps(cfg))
    assert run(["stablemap", "genus", "--input", str(path), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["arithmetic_genus"] == 1


def test_stablemap_domain_error_exit(capsys):
    assert run(["stablemap", "chain-config", "--e", "1"]) == 2
    assert "ETooSmall" in capsys.readouterr().err


def test_verify_small_run(capsys):
    assert run(["verify", "--seed", "0", "--samples", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["discrepancy_documented"] == 1
    ids = [c["id"] for c in payload["checks"]]
    assert ids == sorted(ids)


def test_verify_deterministic_bytes(capsys):
    assert run(["verify", "--seed", "1", "--samples", "2", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["verify", "--seed", "1", "--samples", "2", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_missing_input_file_is_usage_error(capsys):
    assert run(["lattice", "build", "--input", "/nonexistent/file.json"]) == 2
    capsys.readouterr()
