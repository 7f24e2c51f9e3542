import json
import subprocess
import sys

import pytest

from surgery_sieve.cli import (
    cmd_classify,
    cmd_invariants,
    cmd_obstruct,
    cmd_rank,
    cmd_scan,
    main,
    parse_knot_spec,
    parse_slope,
)
from surgery_sieve.errors import DomainError, ParseError
from surgery_sieve.exactnum import Slope

VERDICT_KEYS = {"status", "check", "reason", "witness"}
STATUSES = {"obstructed", "consistent", "inconclusive", "by_citation"}


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def check_schema(rep):
    """The published report shape: versioned, JSON scalars only, verdicts well formed."""
    assert rep["schema"] == "surgery-sieve/1"

    def walk(x):
        if isinstance(x, dict):
            for k, v in x.items():
                assert isinstance(k, str)
                if k not in ("slope", "slopes"):  # slopes keep their "p/q" label
                    walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert x is None or isinstance(x, (str, int, bool)), x
            if isinstance(x, str) and "/" in x and x.replace("-", "").replace("/", "").isdigit():
                num, den = x.split("/")
                assert int(den) > 1

    walk(rep)
    for v in rep.get("verdicts", []) + ([rep] if "status" in rep else []):
        assert VERDICT_KEYS <= set(v) and v["status"] in STATUSES


def test_parse_knot_spec():
    k = parse_knot_spec("pretzel:1,0,0")
    assert k.family == "pretzel" and k.params == (1, 0, 0) and str(k) == "pretzel:1,0,0"
    assert parse_knot_spec("whitehead:0,-1,5").params == (0, -1, 5)


@pytest.mark.parametrize("text,pos", [
    ("pretzel:1,2", 11),
    ("pretzel", 7),
    ("torus:2,3", 0),
    ("thin:5", 6),
    ("thin:5,x", 7),
    ("pretzel:1,,0", 10),
    ("lspace:2;", 8),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse_knot_spec(text)
    assert e.value.position == pos and e.value.expected


def test_parse_slope():
    assert parse_slope("18/4") == Slope(9, 2)
    assert parse_slope("-1/3") == Slope(1, -3)
    assert parse_slope("1/-3") == Slope(1, -3)
    assert parse_slope("5") == Slope(5, 1)
    assert parse_slope("inf").is_infinite
    for bad in ("0/0", "a/b", "1/2/3", ""):
        with pytest.raises(ParseError):
            parse_slope(bad)


def test_invariants_examples():
    rep = cmd_invariants("pretzel:1,0,0,0,0,0,0,0,0")
    assert {k: rep[k] for k in ("g", "tau", "V", "a2", "a4", "v3")} == {
        "g": 4, "tau": 4, "V": 15, "a2": 14, "a4": 25, "v3": 50}
    rep = cmd_invariants("pretzel:0,0,0")
    assert (rep["g"], rep["a2"], rep["v3"], rep["det"]) == (1, 1, 1, 3)
    check_schema(rep)
    with pytest.raises(ParseError):
        cmd_invariants("pretzel:1,2")


def test_invariants_omits_unknowns():
    rep = cmd_invariants("lspace:3")
    assert "a2" not in rep and rep["V"] == 5
    rep = cmd_invariants("thin:7,-1")
    assert (rep["tau"], rep["eps"], rep["V"]) == (-1, -1, 3)


def test_rank_examples():
    rep = cmd_rank("thin:3,1", "-1/1", spinc=True)
    assert rep["total"] == 3 and rep["per_spinc"] == [3]
    rep = cmd_rank("lspace:2", "7/1", spinc=True)
    assert rep["total"] == 7 and rep["per_spinc"] == [1] * 7
    with pytest.raises(DomainError):
        cmd_rank("thin:5,0", "0/1")
    with pytest.raises(DomainError):
        cmd_rank("whitehead:0,1,5", "1/1")


@pytest.mark.parametrize("spec", ["pretzel:1,2,0", "thin:7,-1", "thin:9,2", "lspace:3", "doubletwist:2,2"])
@pytest.mark.parametrize("slope", ["1/1", "-3/2", "7/3", "12/-5", "inf", "25/1"])
def test_rank_total_equals_spinc_sum(spec, slope):
    rep = cmd_rank(spec, slope, spinc=True)
    assert sum(rep["per_spinc"]) == rep["total"]


def test_rank_mirror_negates_slope():
    a = cmd_rank("thin:7,1", "3/2", spinc=True)
    b = cmd_rank("thin:7,-1", "-3/2", spinc=True)
    assert a["per_spinc"] == b["per_spinc"] and a["total"] == b["total"]


def test_obstruct_examples():
    rep = cmd_obstruct("pretzel:0,0,0", "18/4", "18/2")
    assert rep["summary"] == "consistent"
    check_schema(rep)
    rep = cmd_obstruct("pretzel:1,0,0,0,0,0,0,0,0", "15/4", "15/-1")
    assert rep["summary"] == "obstructed"
    combo = [v for v in rep["verdicts"] if v["check"] == "combo"]
    assert combo and combo[0]["witness"]["difference"] == -8
    rep = cmd_obstruct("lspace:2", "3/2", "3/-1")
    assert rep["summary"] == "obstructed"
    assert any(v["check"] == "lspace_gradings" and v["status"] == "obstructed" for v in rep["verdicts"])


def test_obstruct_rejects_mismatched_numerators():
    with pytest.raises(DomainError):
        cmd_obstruct("pretzel:0,0,0", "18/4", "17/2")
    with pytest.raises(DomainError):
        cmd_obstruct("pretzel:0,0,0", "3/2", "6/4")


def test_obstruct_same_sign_uses_gate():
    rep = cmd_obstruct("pretzel:1,1,0", "5/1", "5/2")
    gates = [v for v in rep["verdicts"] if v["check"] == "lspace_gate"]
    assert gates and gates[0]["status"] == "obstructed" and gates[0]["citation"]


def test_classify_examples():
    rep = cmd_classify("pretzel:1,1,1,1,1")
    assert rep["status"] == "by_citation" and "citation" in rep
    assert cmd_classify("whitehead:0,1,5")["status"] == "obstructed"
    assert cmd_classify("whitehead:0,0,3")["status"] == "inconclusive"
    with pytest.raises(DomainError):
        cmd_classify("lspace:2")


def test_scan_examples():
    rep = cmd_scan("pretzel:1,0,0,0,0,0,0,0,0", 200)
    assert rep["survivors"] == [] and rep["candidates"] > 0
    rep = cmd_scan("lspace:3", 100)
    assert rep["survivors"] == [] and rep["candidates"] > 0
    for spec in ("pretzel:0,0,0", "lspace:2", "thin:3,1"):
        assert cmd_scan(spec, 0)["survivors"] == []
    rep = cmd_scan("whitehead:0,1,5", 50)
    assert rep["survivors"] == [] and rep["classified"]["status"] == "obstructed"
    with pytest.raises(DomainError):
        cmd_scan("thin:5,0", 10)


def test_scan_mirror_matches():
    a = cmd_scan("thin:7,1", 40)
    b = cmd_scan("thin:7,-1", 40)
    assert a["candidates"] == b["candidates"]
    assert a["survivors"] and len(a["survivors"]) == len(b["survivors"])
    for x, y in zip(a["survivors"], b["survivors"]):
        assert (x["p"], x["summary"]) == (y["p"], y["summary"])
        assert {x["q"], x["q_prime"]} == {-y["q"], -y["q_prime"]}


def test_main_exit_codes(capsys):
    code, out, _ = run(["invariants", "pretzel:0,0,0"], capsys)
    assert code == 0 and json.loads(out)["a2"] == 1
    code, _, err = run(["invariants", "pretzel:1,2"], capsys)
    assert code == 2 and "position" in err
    code, _, err = run(["rank", "thin:5,0", "0/1"], capsys)
    assert code == 3
    code, _, _ = run(["rank", "thin:3,1", "-1/1", "--spinc"], capsys)
    assert code == 0


def test_main_argparse_error_is_exit_two(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_json_round_trip_is_deterministic(capsys):
    argvs = [
        ["invariants", "doubletwist:1,4"],
        ["rank", "lspace:3", "10/3", "--spinc"],
        ["obstruct", "pretzel:2,0,1,0,0,0,0,0,0", "21/4", "21/-1"],
        ["classify", "pretzel:0,0,0,0,0,0,0,0,0"],
        ["scan", "lspace:2", "--p-max", "30"],
    ]
    for argv in argvs:
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second
        rep = json.loads(first)
        check_schema(rep)
        assert json.dumps(rep, sort_keys=True) == first.strip()


def test_text_output(capsys):
    for argv in (["--text", "invariants", "pretzel:0,0,0"], ["invariants", "--text", "pretzel:0,0,0"]):
        code, out, _ = run(argv, capsys)
        assert code == 0 and "a2: 1" in out.splitlines()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "surgery_sieve", "rank", "thin:3,1", "-1/1", "--spinc"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["per_spinc"] == [3]
