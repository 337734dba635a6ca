import json

import pytest

from diskapprox import checks
from diskapprox.cli import main
from diskapprox.formats import InstanceFile, read_instance, write_instance
from diskapprox.geometry import random_instance
from diskapprox.graphs import build_graph, is_connected


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def geo_instance(tmp_path):
    path = tmp_path / "geo.udg"
    write_instance(random_instance(12, 5.0, 1.0, 424), path)
    return str(path)


@pytest.fixture
def connected_instance(tmp_path, capsys):
    path = tmp_path / "connected.udg"
    code, _, _ = run(
        capsys, "gen", "-n", "10", "--box", "5", "--radius", "1",
        "--seed", "99", "--connected", "-o", str(path),
    )
    assert code == 0
    return str(path)


class TestBound:
    def test_square(self, capsys):
        code, out, _ = run(capsys, "bound", "--polygon", "4")
        assert code == 0 and out == "15\n"

    def test_triangle_and_hexagon(self, capsys):
        assert run(capsys, "bound", "--polygon", "3")[1] == "22\n"
        assert run(capsys, "bound", "--polygon", "6")[1] == "11\n"

    def test_degenerate_polygon(self, capsys):
        code, _, err = run(capsys, "bound", "--polygon", "2")
        assert code == 1 and "error" in err


class TestGen:
    def test_deterministic_output(self, capsys):
        args = ("gen", "-n", "15", "--box", "6", "--radius", "1", "--seed", "5")
        first = run(capsys, *args)
        second = run(capsys, *args)
        assert first == second
        assert first[0] == 0
        assert first[1].startswith("udg 1 geometric\n")

    def test_connected_flag(self, connected_instance):
        doc = read_instance(connected_instance)
        assert is_connected(doc.to_graph())

    def test_radius_range(self, capsys, tmp_path):
        path = tmp_path / "circle.udg"
        code, _, _ = run(
            capsys, "gen", "-n", "8", "--box", "6", "--radius", "0.5:2",
            "--seed", "3", "-o", str(path),
        )
        assert code == 0
        inst = read_instance(str(path)).to_geometric_instance()
        assert not inst.unit

    def test_bad_parameters(self, capsys):
        code, _, err = run(capsys, "gen", "-n", "0", "--box", "5", "--radius", "1", "--seed", "1")
        assert code == 1 and "error" in err


class TestSolve:
    def test_mis_on_colocated_disks(self, capsys, tmp_path):
        path = tmp_path / "k20.udg"
        write_instance(random_instance(20, 0.5, 1.0, 7), path)
        code, out, _ = run(capsys, "solve", str(path), "--problem", "mis")
        assert code == 0
        assert json.loads(out)["value"] == 1

    def test_every_problem_passes_verify(self, capsys, tmp_path, connected_instance):
        for problem in ("vc", "color", "online-color", "mis", "ds", "ids", "tds", "cds"):
            code, out, _ = run(capsys, "solve", connected_instance, "--problem", problem)
            assert code == 0, problem
            solution_path = tmp_path / f"{problem}.json"
            solution_path.write_text(out)
            verify_code, verdict, _ = run(capsys, "verify", connected_instance, str(solution_path))
            assert verify_code == 0 and verdict == "valid\n", problem

    def test_online_color_orders(self, capsys, geo_instance):
        code, out, _ = run(
            capsys, "solve", geo_instance, "--problem", "online-color",
            "--order", "random:9",
        )
        assert code == 0
        doc = json.loads(out)
        assert sorted(doc["meta"]["order"]) == list(range(12))

    def test_cds_meta_carries_trace(self, capsys, connected_instance):
        code, out, _ = run(capsys, "solve", connected_instance, "--problem", "cds", "--root", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["meta"]["root"] == 2
        assert doc["meta"]["trace"]["independent"][0] == [2]

    def test_class_certificate_exit_code(self, capsys, tmp_path):
        K44 = build_graph(8, [(u, 4 + v) for u in range(4) for v in range(4)])
        path = tmp_path / "k44.udg"
        write_instance(InstanceFile.from_graph(K44), path)
        code, _, err = run(capsys, "solve", str(path), "--problem", "vc")
        assert code == 2 and "error" in err
        code, _, _ = run(capsys, "solve", str(path), "--problem", "mis")
        assert code == 2
        # the circle variant has enough colors for this graph
        code, out, _ = run(capsys, "solve", str(path), "--problem", "vc", "--variant", "circle")
        assert code == 0
        assert checks.is_vertex_cover(K44, json.loads(out)["vertices"])

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "no-such-file.udg", "--problem", "vc")
        assert code == 1 and "error" in err


class TestExact:
    def test_matches_library(self, capsys, connected_instance):
        from diskapprox.exact import exact_vc

        G = read_instance(connected_instance).to_graph()
        code, out, _ = run(capsys, "exact", connected_instance, "--problem", "vc")
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == exact_vc(G)[0]
        assert checks.is_vertex_cover(G, doc["vertices"])

    def test_chromatic_witness(self, capsys, connected_instance):
        G = read_instance(connected_instance).to_graph()
        code, out, _ = run(capsys, "exact", connected_instance, "--problem", "color")
        assert code == 0
        doc = json.loads(out)
        assert checks.is_proper_coloring(G, doc["colors"])


class TestVerify:
    def test_rejects_tampered_solution(self, capsys, tmp_path, geo_instance):
        code, out, _ = run(capsys, "solve", geo_instance, "--problem", "ds")
        doc = json.loads(out)
        doc["vertices"] = doc["vertices"][:-1] if doc["vertices"] else [0]
        doc["value"] = len(doc["vertices"])
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, verdict, _ = run(capsys, "verify", geo_instance, str(bad))
        assert code == 1 and verdict.startswith("invalid")


class TestBench:
    def test_byte_identical_runs(self, capsys):
        args = (
            "bench", "--instances", "4", "--n-range", "6:10",
            "--problems", "vc,mis,ds", "--seed", "11",
        )
        first = run(capsys, *args)
        second = run(capsys, *args)
        assert first == second
        assert first[0] == 0

    def test_csv_schema_and_bounds(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--instances", "3", "--n-range", "6:9",
            "--problems", "vc,color,online-color,mis,ds,ids,tds,cds", "--seed", "2",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "seed,n,box,radius,problem,heur,opt,ratio,bound,ms"
        assert len(lines) == 1 + 3 * 8
        for line in lines[1:]:
            fields = line.split(",")
            assert len(fields) == 10
            ratio, bound = float(fields[7]), float(fields[8])
            assert 1.0 <= ratio <= bound + 1e-9
            assert fields[9] == "0"  # reproducible by default

    def test_circle_variant(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--instances", "2", "--n-range", "6:8",
            "--problems", "vc,color,mis", "--seed", "4", "--radius", "0.5:2",
        )
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            fields = line.split(",")
            assert fields[3] == "0.5:2"
            assert float(fields[7]) <= float(fields[8]) + 1e-9

    def test_circle_variant_rejects_domination(self, capsys):
        code, _, err = run(
            capsys, "bench", "--instances", "1", "--n-range", "6:6",
            "--problems", "ds", "--seed", "4", "--radius", "0.5:2",
        )
        assert code == 1 and "error" in err


class TestUsage:
    def test_unknown_problem(self, capsys):
        code, _, _ = run(capsys, "solve", "x.udg", "--problem", "tsp")
        assert code == 1

    def test_no_command(self, capsys):
        assert run(capsys)[0] == 1

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0
