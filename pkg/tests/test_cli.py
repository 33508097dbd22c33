import json

import pytest

from lehmerlab.cli import main

LEHMER_NEG_T = [1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]


def run_json(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_mahler_example(capsys):
    code, doc, _ = run_json(
        ["mahler", "--poly", "1,1,0,-1,-1,-1,-1,-1,0,1,1", "--json-only"], capsys
    )
    assert code == 0
    assert abs(doc["result"]["mahler"] - 1.17628) < 1e-4
    assert doc["result"]["lower"] <= doc["result"]["mahler"] <= doc["result"]["upper"]
    assert doc["inputs"]["tol"] == 1e-10


def test_mahler_symbolic_input(capsys):
    code, doc, _ = run_json(
        ["mahler", "--poly", "t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1"],
        capsys,
    )
    assert code == 0
    assert abs(doc["result"]["mahler"] - 1.1762808182599176) < 1e-12


def test_alexander_example(capsys):
    code, doc, _ = run_json(
        ["alexander", "--n", "3", "--braid", "s1 s2^-1 T^2", "--json-only"], capsys
    )
    assert code == 0
    assert doc["result"]["alexander"]["coeffs"] == LEHMER_NEG_T
    assert doc["result"]["alexander"]["min_deg"] == 0


def test_hankel_example(capsys):
    code, doc, _ = run_json(
        ["hankel", "--seq", "1,1,2,3,5,8,13", "--n", "1", "--k", "2"], capsys
    )
    assert code == 0
    assert doc["result"]["value"] == 1


def test_hankel_all_values(capsys):
    code, doc, _ = run_json(
        ["hankel", "--seq", "1,1,2,3,5,8,13,21", "--k", "2", "--json-only"], capsys
    )
    assert code == 0
    # Fibonacci 2x2 Hankel determinants alternate +-1 (Cassini).
    assert doc["result"]["values"] == [1, -1, 1, -1, 1, -1]


def test_deterministic_output(capsys):
    argv = ["growth", "--seq", "1,1,2,3,5,8,13,21,34,55,89,144", "--k-max", "2", "--json-only"]
    code1 = main(argv)
    first, _ = capsys.readouterr()
    code2 = main(argv)
    second, _ = capsys.readouterr()
    assert code1 == code2 == 0
    assert first == second


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["mahler"])  # missing --poly
    assert exc.value.code == 2
    capsys.readouterr()


def test_computation_error_exit_1(capsys):
    code, doc, _ = run_json(
        ["alexander", "--n", "3", "--braid", "s1", "--json-only"], capsys
    )
    assert code == 1
    assert doc["error"]["type"] == "ValueError"
    assert "determinant" in doc["error"]["message"]


def test_bad_polynomial_exit_1(capsys):
    code, doc, _ = run_json(["mahler", "--poly", "1,oops,3", "--json-only"], capsys)
    assert code == 1
    assert doc["error"]["type"] in ("ValueError", "ZeroDivisionError")


def test_file_input(tmp_path, capsys):
    p = tmp_path / "lehmer.txt"
    p.write_text("1,1,0,-1,-1,-1,-1,-1,0,1,1\n")
    code, doc, _ = run_json(["mahler", "--poly", f"@{p}", "--json-only"], capsys)
    assert code == 0
    assert abs(doc["result"]["mahler"] - 1.1762808182599176) < 1e-12


def test_missing_file_exit_1(capsys):
    code, doc, _ = run_json(
        ["mahler", "--poly", "@/no/such/file", "--json-only"], capsys
    )
    assert code == 1
    assert doc["error"]["type"] in ("FileNotFoundError", "OSError")


def test_summary_on_stderr_unless_json_only(capsys):
    code, _, err = run_json(["primitivity", "--matrix", "[[1,1],[1,0]]"], capsys)
    assert code == 0
    assert "primitive" in err
    code, _, err = run_json(
        ["primitivity", "--matrix", "[[1,1],[1,0]]", "--json-only"], capsys
    )
    assert code == 0
    assert err == ""


def test_poly_coeffs_round_trip(capsys):
    # JSON coefficient lists feed straight back in as comma lists.
    _, doc, _ = run_json(
        ["alexander", "--n", "3", "--braid", "s1 s2^-1 T^2", "--json-only"], capsys
    )
    coeffs = ",".join(str(c) for c in doc["result"]["alexander"]["coeffs"])
    code, doc2, _ = run_json(["mahler", f"--poly={coeffs}", "--json-only"], capsys)
    assert code == 0
    assert abs(doc2["result"]["mahler"] - 1.1762808182599176) < 1e-12


def test_fit_recurrence(capsys):
    code, doc, _ = run_json(
        ["fit-recurrence", "--seq", "1,1,2,3,5,8,13,21,34", "--json-only"], capsys
    )
    assert code == 0
    assert doc["result"]["char"] == [-1, -1, 1]
    assert doc["result"]["char_display"] == "t^2-t-1"
    assert doc["result"]["init"] == [1, 1]


def test_growth_entries(capsys):
    code, doc, _ = run_json(
        ["growth", "--seq", "1,1,2,3,5,8,13,21,34,55,89,144", "--k-max", "3", "--json-only"],
        capsys,
    )
    assert code == 0
    entries = doc["result"]["entries"]
    assert [e["k"] for e in entries] == [0, 1, 2, 3]
    assert abs(doc["result"]["max_exact"] - 1.618033988749895) < 1e-9
    assert entries[3]["exact"] == 0.0  # k > degree vanishes
    assert doc["inputs"]["window"] == 8


def test_lefschetz(capsys):
    code, doc, _ = run_json(
        ["lefschetz", "--matrix", "[[2,1],[1,1]]", "--iters", "4", "--boundary", "--json-only"],
        capsys,
    )
    assert code == 0
    assert doc["result"]["lefschetz"] == [-2, -6, -17, -46]
    assert doc["result"]["char"]["coeffs"] == [1, -3, 1]
    assert abs(doc["result"]["mahler_char"] - 2.618033988749895) < 1e-12


def test_net_trace_and_perron(capsys):
    code, doc, _ = run_json(
        ["net-trace", "--poly=-1,-1,1", "--iters", "8", "--json-only"], capsys
    )
    assert code == 0
    assert doc["result"]["first_negative_n"] is None
    code, doc, _ = run_json(
        ["perron", "--poly=-1,-1,1", "--n-net", "40", "--json-only"], capsys
    )
    assert code == 0
    assert doc["result"]["perron_candidate"] is True
    assert doc["result"]["net_traces_checked"] == 40


def test_padding_trivial_when_already_nonnegative(capsys):
    code, doc, _ = run_json(["padding", "--poly=3,-4,1", "--json-only"], capsys)
    assert code == 0
    assert doc["result"]["found"] is True
    assert doc["result"]["indices"] == []
    assert doc["result"]["phi"]["coeffs"] == [1]


def test_fg_iterate_per_generator(capsys):
    code, doc, _ = run_json(
        ["fg-iterate", "--endo", "a -> a^3; b -> b^2", "--iters", "5", "--json-only"],
        capsys,
    )
    assert code == 0
    per = doc["result"]["per_generator"]
    assert per["a"] == [3, 9, 27, 81, 243]
    assert per["b"] == [2, 4, 8, 16, 32]


def test_fg_iterate_word(capsys):
    code, doc, _ = run_json(
        [
            "fg-iterate",
            "--endo",
            "a -> a^3; b -> b^2",
            "--word",
            "b a b^-1",
            "--iters",
            "6",
            "--json-only",
        ],
        capsys,
    )
    assert code == 0
    assert doc["result"]["lengths"] == [3**n + 2 ** (n + 1) for n in range(1, 7)]


def test_fg_growth_sum(capsys):
    code, doc, _ = run_json(
        [
            "fg-growth",
            "--endo",
            "a -> a^3; b -> b^2",
            "--k-max",
            "2",
            "--iters",
            "18",
            "--sum",
            "--json-only",
        ],
        capsys,
    )
    assert code == 0
    rep = doc["result"]["sum_report"]
    exact = {e["k"]: e["exact"] for e in rep["entries"]}
    assert abs(exact[1] - 3.0) < 1e-9
    assert abs(exact[2] - 6.0) < 1e-9


def test_fg_from_matrix(capsys):
    code, doc, _ = run_json(
        ["fg-from-matrix", "--matrix", "[[1,1],[1,0]]", "--json-only"], capsys
    )
    assert code == 0
    assert doc["result"]["images"] == ["a b", "a"]
    assert doc["result"]["abelianization"] == [[1, 1], [1, 0]]


def test_f2_positive_aut_worked_instance(capsys):
    code, doc, _ = run_json(
        ["f2-positive-aut", "--matrix", "[[2,1],[1,1]]", "--json-only"], capsys
    )
    assert code == 0
    r = doc["result"]
    assert r["images"] == ["a b a", "a b"]
    assert r["matches_input"] is True
    assert r["positive_words"] is True
    assert r["nielsen_basis"] is True


def test_burau_two_strands(capsys):
    code, doc, _ = run_json(["burau", "--n", "2", "--braid", "s1", "--json-only"], capsys)
    assert code == 0
    assert doc["result"]["size"] == 1
    cell = doc["result"]["matrix"][0][0]
    assert cell["coeffs"] == [-1] and cell["min_deg"] == 1


def test_lehmer_gap(capsys):
    code, doc, _ = run_json(
        ["lehmer-gap", "--n", "3", "--braid", "s1 s2^-1 T^2", "--json-only"], capsys
    )
    assert code == 0
    assert abs(doc["result"]["gap"] - 1.1762808182599176) < 1e-9


def test_entropy(capsys):
    code, doc, _ = run_json(
        ["entropy", "--n", "3", "--braid", "s1 s2^-1", "--iters", "10", "--json-only"],
        capsys,
    )
    assert code == 0
    assert abs(doc["result"]["gr1"] - 2.618033988749895) / 2.618033988749895 < 0.02
    gens = [g["generator"] for g in doc["result"]["per_generator"]]
    assert gens == [1, 2, 3]


def test_env_var_tolerance(monkeypatch, capsys):
    monkeypatch.setenv("LEHMERLAB_TOL", "1e-8")
    code, doc, _ = run_json(["mahler", "--poly", "1,1", "--json-only"], capsys)
    assert code == 0
    assert doc["inputs"]["tol"] == 1e-8
    monkeypatch.setenv("LEHMERLAB_TOL", "not-a-number")
    code, doc, _ = run_json(["mahler", "--poly", "1,1", "--json-only"], capsys)
    assert code == 0
    assert doc["inputs"]["tol"] == 1e-10
