import json

from schurhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_skew(self, capsys):
        code, out, _ = run(capsys, "expand", "2,2/1")
        assert code == 0
        assert out.strip() == "s[2,1]"

    def test_two_boxes(self, capsys):
        code, out, _ = run(capsys, "expand", "2,1/1")
        assert code == 0
        assert out.strip() == "s[2] + s[1,1]"

    def test_single(self, capsys):
        code, out, _ = run(capsys, "expand", "1")
        assert code == 0
        assert out.strip() == "s[1]"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "expand", "2,2/1", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["schema"] == 1
        assert data["expansion"] == [{"coefficient": 1, "partition": [2, 1]}]

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "expand", "4,5")
        assert code == 2
        assert "error" in err

    def test_vars_oracle(self, capsys):
        code, out, _ = run(capsys, "expand", "1,1", "--vars", "2", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["monomials"] == [{"coefficient": 1, "exponents": [1, 1]}]


class TestVerify:
    def test_positive_exit_0(self, capsys):
        code, out, _ = run(capsys, "verify", "--beta", "2,1", "--gamma", "4,4,2,2/2,1")
        assert code == 0
        assert "equal: True" in out

    def test_counterexample_exit_1(self, capsys):
        code, out, _ = run(capsys, "verify", "--beta", "2,1", "--gamma", "8,7,2/3,1")
        assert code == 1
        assert "looseEnds=True" in out

    def test_single_box_beta(self, capsys):
        code, _, _ = run(capsys, "verify", "--beta", "1", "--gamma", "4,4,2,2/2,1")
        assert code == 0

    def test_strict_loose_ends_exit_3(self, capsys):
        code, _, err = run(
            capsys, "verify", "--beta", "2,1", "--gamma", "8,7,2/3,1", "--strict"
        )
        assert code == 3

    def test_no_structure_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "--beta", "2,1", "--gamma", "2,2")
        assert code == 2

    def test_w_selector(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--beta", "2,1", "--gamma", "8,7,2/3,1", "--w", "1", "--json"
        )
        data = json.loads(out)
        assert code == 0  # the W=(1) structure has no loose ends and verifies
        assert data["structure"]["w"] == "1"
        assert data["equal"] is True

    def test_w_out_of_range(self, capsys):
        code, _, err = run(
            capsys, "verify", "--beta", "2,1", "--gamma", "8,7,2/3,1", "--w", "9"
        )
        assert code == 2

    def test_corollary_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--beta", "2,1", "--gamma", "4,4,2,2/2,1", "--corollary"
        )
        assert code == 0
        assert "equal: True" in out

    def test_trace_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--beta", "2,1", "--gamma", "4,4,2,2/2,1", "--trace", "--json",
        )
        data = json.loads(out)
        assert code == 0
        assert data["trace"]["balance"] is True
        assert data["trace"]["keySize"] == 5

    def test_json_bit_stable(self, capsys):
        _, out1, _ = run(capsys, "verify", "--beta", "2,1", "--gamma", "4,4,2,2/2,1", "--json")
        _, out2, _ = run(capsys, "verify", "--beta", "2,1", "--gamma", "4,4,2,2/2,1", "--json")
        assert out1 == out2


class TestSearch:
    def test_small_catalog(self, capsys):
        code, out, _ = run(capsys, "search", "--max-size", "4", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["schema"] == 1
        rows = data["instances"]
        assert len(rows) == 6  # four gammas of size 4, two of size 3
        assert all(r["equal"] for r in rows if r["hypothesesHold"])

    def test_line_structures_present_at_3(self, capsys):
        # the structure axioms hold literally for a row or column of three
        code, out, _ = run(capsys, "search", "--max-size", "3", "--json")
        data = json.loads(out)
        assert code == 0
        gammas = {r["gamma"] for r in data["instances"]}
        assert gammas == {"3", "1,1,1"}

    def test_every_theorem_instance_equal_size_7(self, capsys):
        code, out, _ = run(capsys, "search", "--max-size", "7", "--json")
        data = json.loads(out)
        assert code == 0
        assert all(r["equal"] for r in data["instances"] if r["hypothesesHold"])

    def test_size_9_includes_figure_instance(self, capsys):
        code, out, _ = run(capsys, "search", "--max-size", "9", "--json")
        data = json.loads(out)
        assert code == 0
        rows = data["instances"]
        landmark = [r for r in rows if r["gamma"] == "4,4,2,2/2,1"]
        assert landmark and all(r["equal"] and r["hypothesesHold"] for r in landmark)
        assert all(r["equal"] for r in rows if r["hypothesesHold"])

    def test_bad_bounds_exit_2(self, capsys):
        code, _, err = run(capsys, "search", "--max-size", "0")
        assert code == 2

    def test_threads_deterministic(self, capsys, monkeypatch):
        _, serial, _ = run(capsys, "search", "--max-size", "5", "--json")
        monkeypatch.setenv("SCHURHOPF_THREADS", "4")
        _, threaded, _ = run(capsys, "search", "--max-size", "5", "--json")
        assert serial == threaded
