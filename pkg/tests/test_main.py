import json

import pytest
from click.testing import CliRunner

from src.main import EXIT_BUDGET, EXIT_FALSE, EXIT_OK, EXIT_USAGE, cli, main


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def test_eq_prints_equal(runner):
    result = runner.invoke(cli, ["eq", "A:n=2: s1 s2 s1", "A:n=2: s2 s1 s2"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.strip() == "equal"


def test_false_predicate_exits_one(runner):
    result = runner.invoke(cli, ["eq", "A:n=2: s1 s2", "A:n=2: s2 s1"])
    assert result.exit_code == EXIT_FALSE
    assert result.stdout.strip() == "not equal"


def test_member_and_map(runner):
    member = runner.invoke(cli, ["member", "B:n=2: t s1 t^-1"])
    assert member.stdout.strip() == "affine (t-sum 0)"
    mapped = runner.invoke(cli, ["map", "--m", "beta", "--n", "2", "AT:n=2: a3"])
    assert mapped.exit_code == EXIT_OK
    assert mapped.stdout.strip() == "A:n=2: s2^-1 s1 s2"


def test_parse_error_exits_two(runner):
    result = runner.invoke(cli, ["eq", "A:n=2: s7", "A:n=2:"])
    assert result.exit_code == EXIT_USAGE
    assert result.stdout == ""
    assert "error:" in result.stderr


def test_wrong_kind_exits_two(runner):
    assert runner.invoke(cli, ["member", "A:n=2: s1"]).exit_code == EXIT_USAGE


def test_budget_errors_exit_three(runner):
    result = runner.invoke(cli, ["--max-strands", "2", "bracket", "A:n=2: s1"])
    assert result.exit_code == EXIT_BUDGET
    assert "budget exceeded" in result.stderr
    endo = runner.invoke(cli, ["--max-endo-len", "2", "eq", "A:n=1: s1^2", "A:n=1:"])
    assert endo.exit_code == EXIT_BUDGET


def test_non_positive_budget_is_a_usage_error(runner):
    assert runner.invoke(cli, ["--max-depth", "0", "dominating", "--n", "2"]).exit_code == EXIT_USAGE


def test_json_matches_text(runner):
    text = runner.invoke(cli, ["decompose", "B:n=2: t"])
    as_json = runner.invoke(cli, ["--json", "decompose", "B:n=2: t"])
    payload = json.loads(as_json.stdout)
    assert payload["verb"] == "decompose"
    assert payload["inputs"] == {"w": "B:n=2: t"}
    assert text.stdout.strip() == f"lambda: {payload['result']['lambda']}\nk: {payload['result']['k']}"


def test_relations_and_dominating(runner):
    relations = runner.invoke(cli, ["relations", "--kind", "A", "--n", "2"])
    assert relations.stdout.strip() == "braid: A:n=2: s1 s2 s1 = A:n=2: s2 s1 s2"
    assert runner.invoke(cli, ["dominating", "--n", "2"]).stdout.strip() == "AT:n=2: s2 s1 a3"


def test_search_then_replay_from_stdin(runner):
    found = runner.invoke(cli, ["search", "A:n=2: s1 s2", "A:n=1: s1"])
    assert found.exit_code == EXIT_OK
    certificate = found.stdout.split("\n", 1)[1]
    replayed = runner.invoke(cli, ["replay", "A:n=2: s1 s2", "-"], input=certificate)
    assert replayed.exit_code == EXIT_OK
    assert replayed.stdout.strip() == "A:n=1: s1"


def test_bad_replay_exits_two(runner):
    result = runner.invoke(cli, ["replay", "A:n=2: s1", "-"], input="destab +1 A:n=1: s2\n")
    assert result.exit_code == EXIT_USAGE


def test_moves_prints_a_derivation(runner):
    result = runner.invoke(cli, ["moves", "AT:n=1: a2 s1", "--which", "dynkin"])
    assert result.exit_code == EXIT_OK
    lines = result.stdout.strip().splitlines()
    assert lines[0].startswith("start: A:n=")
    assert lines[-1].startswith("end: A:n=")


def test_check_writes_a_report(runner, tmp_path):
    out = tmp_path / "suite.csv"
    result = runner.invoke(cli, ["check", "--ranks", "2", "--cases", "1", "--max-len", "4", "--out", str(out)])
    assert result.exit_code == EXIT_OK
    assert out.exists()


def test_main_returns_exit_codes():
    assert main(["eq", "A:n=1: s1", "A:n=1: s1"]) == EXIT_OK
    assert main(["eq", "A:n=1: s1", "A:n=1: s1^-1"]) == EXIT_FALSE
    assert main(["no-such-verb"]) == EXIT_USAGE


def _lines(*parts):
    return "\n".join(str(p) for p in parts)


# verb -> (argv after the verb, stdin, text rebuilt from the JSON payload)
GOLDEN = {
    "eq": (["A:n=2: s1 s2 s1", "A:n=2: s2 s1 s2"], None,
           lambda p: "equal" if p["result"] else "not equal"),
    "member": (["B:n=2: t s1 t^-1"], None,
               lambda p: f"{'' if p['result']['affine'] else 'not '}affine (t-sum {p['result']['t_sum']})"),
    "decompose": (["B:n=2: t"], None,
                  lambda p: _lines(f"lambda: {p['result']['lambda']}", f"k: {p['result']['k']}")),
    "parabolic": (["ATP:n=3: a3"], None, lambda p: p["result"]),
    "kernel": (["B:n=2: s1 t s1^-1"], None, lambda p: p["result"]),
    "schreier": (["F1 F0^-1", "--n", "2"], None, lambda p: p["result"]),
    "ne": (["AT:n=2: a3"], None,
           lambda p: _lines(f"nu: {p['result']['nu']}", f"u: {p['result']['u']}")),
    "map": (["AT:n=2: a3", "--m", "beta", "--n", "2"], None, lambda p: p["result"]),
    "dynkin": (["AT:n=2: s1 a3"], None, lambda p: p["result"]),
    "dominating": (["--n", "2"], None, lambda p: p["result"]),
    "diagram": (["AT:n=2: a3 s1", "--name", "alpha∘iota=beta", "--n", "2"], None,
                lambda p: "commutes" if p["result"] else "does not commute"),
    "close": (["A:n=1: s1^3"], None,
              lambda p: _lines(f"strands: {p['result']['strands']}",
                               f"components: {p['result']['components']}",
                               f"exponent sum: {p['result']['exponent_sum']}",
                               f"normalized bracket: {p['result']['normalized_bracket']}")),
    "affine-close": (["AT:n=2: a3"], None,
                     lambda p: _lines(f"strands: {p['result']['strands']}",
                                      f"components: {p['result']['components']}",
                                      f"exponent sum: {p['result']['exponent_sum']}",
                                      f"normalized bracket: {p['result']['normalized_bracket']}")),
    "bracket": (["A:n=1: s1^3"], None,
                lambda p: _lines(f"bracket: {p['result']['bracket']}",
                                 f"normalized: {p['result']['normalized']}",
                                 f"jones: {p['result']['jones']}")),
    "moves": (["AT:n=1: a2 s1", "--which", "append_a"], None,
              lambda p: _lines(f"start: {p['result']['start']}", p["certificate"], f"end: {p['result']['end']}")),
    "search": (["A:n=2: s1 s2", "A:n=1: s1"], None, lambda p: _lines("found", p["certificate"])),
    "replay": (["A:n=2: s1 s2", "-"], "destab +1 A:n=1: s1\n", lambda p: p["result"]["end"]),
    "relations": (["--kind", "A", "--n", "3"], None,
                  lambda p: "\n".join(f"{r['label']}: {r['lhs']} = {r['rhs']}" for r in p["result"])),
}


def test_golden_table_covers_every_verb():
    from src.commands import VERBS

    assert set(GOLDEN) == set(VERBS)


@pytest.mark.parametrize("verb", sorted(GOLDEN))
def test_json_and_text_agree_for_every_verb(runner, verb):
    args, stdin, rebuild = GOLDEN[verb]
    text = runner.invoke(cli, [verb, *args], input=stdin)
    as_json = runner.invoke(cli, ["--json", verb, *args], input=stdin)
    assert text.exit_code == as_json.exit_code == EXIT_OK, text.stderr
    payload = json.loads(as_json.stdout)
    assert payload["verb"] == verb
    assert text.stdout.rstrip("\n") == rebuild(payload)
