"""CLI tests: verdict lines, JSON stability, exit codes, corpus input."""

from __future__ import annotations

import json

import pytest

from socksort.cli import generate_bench_ordering, main, run_bench


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_sortable_line(self, capsys):
        code, out, _ = run(capsys, "check", "abcabc")
        assert code == 0
        assert out == "sortable, sequence=(a,c,b), output=aaccbb\n"

    def test_unsortable_json(self, capsys):
        code, out, _ = run(capsys, "check", "abacaba", "--json")
        assert code == 1
        assert out.strip() == (
            '{"sortable":false,"witness":{"class":"T1",'
            '"positions":[1,2,3,4,5,6,7]}}'
        )

    def test_json_round_trip_is_byte_identical(self, capsys):
        _, out, _ = run(capsys, "check", "abacaba", "--json")
        parsed = json.loads(out)
        assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == out.strip()

    def test_multiple_inputs_in_order(self, capsys):
        code, out, _ = run(capsys, "check", "abcabc", "abacaba", "ab")
        lines = out.splitlines()
        assert code == 1
        assert len(lines) == 3
        assert lines[0].startswith("sortable")
        assert lines[1].startswith("unsortable")
        assert lines[2].startswith("sortable")

    def test_corpus_file(self, capsys, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("# demo corpus\n\nabcabc\nabacaba\n")
        code, out, _ = run(capsys, "check", "--file", str(corpus))
        assert code == 1
        assert len(out.splitlines()) == 2

    def test_token_mode(self, capsys):
        code, out, _ = run(capsys, "check", "--tokens", "red,blue,red,blue")
        assert code == 0
        assert "sortable" in out

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "check", "abc1")
        assert code == 2
        assert "parse error" in err

    def test_no_inputs_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["check"])
        assert err.value.code == 2

    def test_exit_code_independent_of_output_mode(self, capsys):
        plain = main(["check", "abacaba"])
        capsys.readouterr()
        as_json = main(["check", "abacaba", "--json"])
        capsys.readouterr()
        assert plain == as_json == 1


class TestSort:
    def test_trace_lines(self, capsys):
        code, out, _ = run(capsys, "sort", "abab")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("sortable")
        assert lines[1] == "push 1:a"
        assert "pop:a" in lines

    def test_unsortable_stall(self, capsys):
        code, out, _ = run(capsys, "sort", "abacaba")
        assert code == 1
        assert "greedy stalls" in out


class TestWitness:
    def test_positions_are_one_based(self, capsys):
        code, out, _ = run(capsys, "witness", "aabacaba")
        assert code == 1
        assert "witness=T1" in out
        positions = out.split("positions=(")[1].rstrip(")\n").split(",")
        assert min(int(p) for p in positions) >= 1

    def test_sortable(self, capsys):
        code, out, _ = run(capsys, "witness", "abcabc")
        assert code == 0
        assert "sortable" in out


class TestMinimal:
    def test_yes(self, capsys):
        code, out, _ = run(capsys, "minimal", "abacaba")
        assert code == 0
        assert "yes" in out

    def test_no(self, capsys):
        code, out, _ = run(capsys, "minimal", "abcabc")
        assert code == 1
        assert "no" in out


class TestOracle:
    def test_sortable(self, capsys):
        code, out, _ = run(capsys, "oracle", "abcabc")
        assert code == 0
        assert out.startswith("sortable (oracle)")

    def test_unsortable(self, capsys):
        code, out, _ = run(capsys, "oracle", "abtat", "--json")
        assert code == 0
        assert json.loads(out)["sortable"] is True

    def test_paper_unsortable(self, capsys):
        code, out, _ = run(capsys, "oracle", "abacaba")
        assert code == 1
        assert "unsortable" in out


class TestBasis:
    def test_tab_separated_lines(self, capsys):
        code, out, _ = run(capsys, "basis", "--max-len", "7")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "T1\tabacaba"
        assert lines[-1] == "I1,0\tdabtdat"
        assert len(lines) == 8

    def test_family_selector(self, capsys):
        code, out, _ = run(capsys, "basis", "--family", "1", "--n", "1")
        assert code == 0
        assert out.strip() == "I1,1\tdabtdutau"

    def test_family_needs_n(self, capsys):
        code, _, err = run(capsys, "basis", "--family", "2")
        assert code == 2


class TestVerify:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-len", "5")
        assert code == 0
        assert "no mismatches" in out

    def test_json_with_obs(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-len", "4", "--obs-n", "0", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert set(data) == {"theorem", "cross", "inf_unsort"}
        assert data["theorem"]["mismatches"] == []

    def test_cache_file(self, capsys, tmp_path):
        cache = tmp_path / "cache.tsv"
        code, _, _ = run(capsys, "verify", "--max-len", "4", "--cache", str(cache))
        assert code == 0
        assert cache.exists()
        code, out, _ = run(
            capsys, "verify", "--max-len", "4", "--cache", str(cache), "--json"
        )
        assert code == 0
        assert json.loads(out)["theorem"]["scope"]["cache_hits"] == 23


class TestBench:
    def test_reproducible_inputs(self):
        first = generate_bench_ordering(500, 10, 42)
        second = generate_bench_ordering(500, 10, 42)
        assert first == second
        assert len(first) == 500
        assert set(first) <= set(range(10))

    def test_table_output(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--sizes", "100,200", "--colors", "5", "--seed", "1"
        )
        assert code == 0
        assert "loglog slope=" in out

    def test_slope_computation(self):
        outcome = run_bench([100, 200, 400], 5, 7, repeats=1)
        assert outcome["slope"] is not None
        assert len(outcome["results"]) == 3


class TestUsage:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2
