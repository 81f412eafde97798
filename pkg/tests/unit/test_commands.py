import pytest
from click.testing import CliRunner

from app.services.command_service import CommandService
from main import cli


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def invoke(runner, corpus_dir):
    def call(*arguments: str):
        resolved = [
            str(corpus_dir / argument) if argument.endswith((".alg", ".rel")) else argument
            for argument in arguments
        ]
        return runner.invoke(cli, resolved)
    return call


@pytest.mark.parametrize("golden, arguments, exit_code", [
    ("monoid01_audit_pointed0.out", ["audit", "--algebra", "monoid01.alg", "--context", "pointed:0"], 1),
    ("set2_audit_total.out", ["audit", "--algebra", "set2.alg", "--context", "total"], 1),
    ("set1_audit_total.out", ["audit", "--algebra", "set1.alg"], 0),
    ("ringZ4_congruences.out", ["congruences", "--algebra", "ringZ4.alg"], 0),
    ("bool2_congruences.out", ["congruences", "--algebra", "bool2.alg"], 0),
    ("set3_chain_check_relation_pointed0.out", [
        "check-relation", "--algebra", "set3.alg", "--relation", "set3_chain.rel",
        "--context", "pointed:0", "--property", "left-star-symmetric",
    ], 1),
    ("monoid01_find_terms_pointed0.out", [
        "find-terms", "--algebra", "monoid01.alg", "--kind", "e-subtractive", "--context", "pointed:0",
    ], 1),
    ("groupZ2_find_terms_maltsev.out", ["find-terms", "--algebra", "groupZ2.alg", "--kind", "maltsev"], 0),
    ("monoid01_find_terms_maltsev.out", ["find-terms", "--algebra", "monoid01.alg", "--kind", "maltsev"], 1),
])
def test_machine_output_matches_golden(invoke, golden_dir, golden, arguments, exit_code):
    result = invoke(*arguments, "--machine")

    assert result.exit_code == exit_code
    assert result.stdout == (golden_dir / golden).read_text(encoding="utf-8")


def test_output_is_deterministic(invoke):
    first = invoke("audit", "--algebra", "bool4.alg", "--context", "proto", "--machine")
    second = invoke("audit", "--algebra", "bool4.alg", "--context", "proto", "--machine")

    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_human_audit_report(invoke):
    result = invoke("audit", "--algebra", "bool4.alg", "--context", "proto")

    lines = result.stdout.splitlines()
    assert result.exit_code == 0
    assert lines[0] == "audit of bool4 in context proto"
    assert "  reflexive-star-symmetric: PASS" in lines
    assert "reflexive compatible relations examined: 4" in lines
    assert lines[-1] == "verdict: PASS"


def test_human_audit_lists_counterexamples(invoke):
    result = invoke("audit", "--algebra", "monoid01.alg", "--context", "pointed:0")

    assert "  reflexive-left-star-symmetric: FAIL ({(0,0),(0,1),(1,1)}:(0,1))" in result.stdout.splitlines()
    assert "R={(0,0),(0,1),(1,1)} fails at (0,1)" in result.stdout
    assert result.stdout.splitlines()[-1] == "verdict: FAIL"


def test_truncated_audit_is_inconclusive(invoke):
    result = invoke("audit", "--algebra", "set2.alg", "--max-relations", "1", "--machine")

    assert result.exit_code == 3
    assert "CHECK reflexive-star-symmetric INCONCLUSIVE" in result.stdout.splitlines()


def test_clone_budget_makes_term_search_inconclusive(invoke):
    result = invoke("find-terms", "--algebra", "bool2.alg", "--kind", "e-subtractive", "--clone-budget", "5", "--machine")

    assert result.exit_code == 3
    assert "CHECK e-subtractive[e=0] INCONCLUSIVE witness=incomplete-clone(5)" in result.stdout.splitlines()


def test_term_search_reports_corollary_graph(invoke):
    result = invoke("find-terms", "--algebra", "ringZ2.alg", "--kind", "e-subtractive", "--machine")
    lines = result.stdout.splitlines()

    assert result.exit_code == 0
    assert "CHECK e-subtractive[e=0] PASS witness=add(x, y)" in lines
    assert "CHECK e-subtractive[e=1] PASS witness=add(x, add(y, one))" in lines
    assert any(line.startswith("CHECK corollary-graph[e=0] PASS witness=sigma(y)=") for line in lines)


def test_check_identities_passes_on_pointed_set(invoke):
    result = invoke("check-identities", "--algebra", "pointed2.alg", "--context", "proto", "--machine")

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "CHECK star-of-composite PASS"
    assert len(result.stdout.splitlines()) == 6


def test_check_relation_reports_every_property(invoke):
    result = invoke(
        "check-relation", "--algebra", "monoid01.alg", "--relation", "monoid01_order.rel",
        "--context", "pointed:0", "--machine",
    )

    assert result.exit_code == 1
    assert result.stdout.splitlines() == [
        "CHECK left-star-symmetric FAIL witness=(0,1)",
        "CHECK star-symmetric FAIL witness=(0,1)",
        "CHECK reflexive PASS",
        "CHECK symmetric FAIL",
        "CHECK transitive PASS",
        "CHECK compatible PASS",
    ]


def test_check_relation_on_incompatible_relation(invoke):
    compatible = invoke(
        "check-relation", "--algebra", "bool2.alg", "--relation", "bool2_order.rel",
        "--property", "compatible", "--machine",
    )
    star = invoke("check-relation", "--algebra", "bool2.alg", "--relation", "bool2_order.rel", "--machine")

    assert compatible.exit_code == 1
    assert compatible.stdout == "CHECK compatible FAIL\n"
    assert star.exit_code == 2
    assert star.stderr.startswith("Error: ")


def test_missing_algebra_file_is_a_usage_error(invoke):
    result = invoke("audit", "--algebra", "nowhere.alg")

    assert result.exit_code == 2
    assert "does not exist" in result.stderr


def test_syntax_error_names_line_and_column(runner, tmp_path):
    broken = tmp_path / "broken.alg"
    broken.write_text("algebra a\nsize 2\nop f/2 = [0 1 1]\n", encoding="utf-8")

    result = runner.invoke(cli, ["congruences", "--algebra", str(broken)])

    assert result.exit_code == 2
    assert f"{broken}:3:4: " in result.stderr


def test_malformed_context_is_a_usage_error(invoke):
    result = invoke("audit", "--algebra", "set2.alg", "--context", "everything")
    assert result.exit_code == 2


def test_e_subtractive_terms_refuse_total_context(invoke):
    result = invoke("find-terms", "--algebra", "bool2.alg", "--kind", "e-subtractive", "--context", "total")

    assert result.exit_code == 2
    assert "pointed or proto" in result.stderr


def test_invalid_pointed_base_is_a_usage_error(invoke):
    result = invoke("audit", "--algebra", "bool2.alg", "--context", "pointed:0")
    assert result.exit_code == 2


def test_unknown_kind_is_rejected_by_click(invoke):
    result = invoke("find-terms", "--algebra", "bool2.alg", "--kind", "abelian")
    assert result.exit_code == 2


def test_internal_error_is_not_reported_as_a_counterexample(invoke, monkeypatch):
    def broken(self, config):
        raise TypeError("'int' object is not callable")

    monkeypatch.setattr(CommandService, "run_command", broken)

    result = invoke("audit", "--algebra", "bool4.alg", "--context", "proto", "--machine")

    assert result.exit_code == 2
    assert result.stdout == ""
    assert result.stderr == "Error: internal error: TypeError: 'int' object is not callable\n"


def test_skipped_corollary_graph_is_noted(invoke):
    result = invoke("find-terms", "--algebra", "ringZ4.alg", "--kind", "e-subtractive")
    lines = result.stdout.splitlines()

    assert result.exit_code == 0
    assert any(line.startswith("corollary graph for e=0 not checked: ") for line in lines)
    assert "corollary-graph[e=0]" not in result.stdout
