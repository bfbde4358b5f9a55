import json

import pytest
from typer.testing import CliRunner

from edgeadmit.cli.main import app, run
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.services.cuts import CutService
from edgeadmit.services.degeneracy import DegeneracyService
from edgeadmit.testkit.corpus import generate, parse_corpus_spec
from edgeadmit.utils.graph_format import serialize_graph

runner = CliRunner(mix_stderr=False)


@pytest.fixture
def graph_file(tmp_path):
    def write(name: str, graph: MultiGraph) -> str:
        path = tmp_path / name
        path.write_text(serialize_graph(graph), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def theta3(graph_file):
    return graph_file("theta3.g", MultiGraph.theta(3))


@pytest.fixture
def k4(graph_file):
    return graph_file("k4.g", MultiGraph.complete(4))


def test_degeneracy_of_theta(theta3):
    result = runner.invoke(app, ["degeneracy", "--speed", "inf", theta3])

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "delta=3"
    assert "layout speed=inf" in lines
    assert "hideout k=3 speed=inf" in lines


def test_degeneracy_json_lines(theta3):
    result = runner.invoke(app, ["degeneracy", theta3, "--format", "json-lines"])

    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert result.exit_code == 0
    assert records[0] == {'record': 'degeneracy', 'delta': 3, 'speed': None}
    assert [item['record'] for item in records] == ['degeneracy', 'layout', 'hideout']
    assert records[1]['degeneracy'] == 3


def test_layout_certificate_verifies(tmp_path, theta3):
    certificate = tmp_path / "theta3.layout"

    produced = runner.invoke(app, ["layout", theta3, "--k", "3", "--output", str(certificate)])
    checked = runner.invoke(
        app, ["verify", theta3, "--layout", str(certificate), "--speed", "inf", "--k", "3"]
    )

    assert produced.exit_code == 0
    assert certificate.read_text(encoding="utf-8") == "layout speed=inf\n1 0\n0 3\n"
    assert checked.exit_code == 0
    assert checked.stdout.splitlines() == ["layout: accepted"]


def test_tampered_layout_is_rejected(tmp_path, theta3):
    certificate = tmp_path / "theta3.layout"
    certificate.write_text("layout speed=inf\n1 0\n0 2\n", encoding="utf-8")

    result = runner.invoke(app, ["verify", theta3, "--layout", str(certificate)])

    assert result.exit_code == 1
    assert result.stdout.splitlines()[0] == "layout: rejected"


def test_layout_below_degeneracy_prints_hideout(theta3):
    result = runner.invoke(app, ["layout", theta3, "--k", "2"])

    assert result.exit_code == 1
    assert result.stdout.splitlines() == ["hideout k=3 speed=inf", "0 3", "1 3"]


def test_hideout_command(tmp_path, theta3):
    certificate = tmp_path / "theta3.hideout"

    found = runner.invoke(app, ["hideout", theta3, "--k", "3", "--output", str(certificate)])
    empty = runner.invoke(app, ["hideout", theta3, "--k", "4"])
    checked = runner.invoke(app, ["verify", theta3, "--hideout", str(certificate), "--k", "2"])

    assert found.exit_code == 0
    assert empty.exit_code == 1
    assert checked.exit_code == 0
    assert checked.stdout.splitlines() == ["hideout: accepted"]


def test_verify_needs_exactly_one_certificate(tmp_path, theta3):
    certificate = tmp_path / "theta3.layout"
    certificate.write_text("layout speed=inf\n1 0\n0 3\n", encoding="utf-8")

    both = runner.invoke(app, ["verify", theta3, "--layout", str(certificate), "--hideout", str(certificate)])
    neither = runner.invoke(app, ["verify", theta3])
    wrong_kind = runner.invoke(app, ["verify", theta3, "--hideout", str(certificate)])

    assert both.exit_code == 2
    assert neither.exit_code == 2
    assert wrong_kind.exit_code == 2


def test_decompose_k4_prints_witness(k4):
    result = runner.invoke(app, ["decompose", "--k", "2", k4])

    assert result.exit_code == 1
    lines = result.stdout.splitlines()
    assert lines[0].startswith("immersion k=2 ")
    assert lines[0].endswith("order=3")
    assert len(lines) == 4


def test_decompose_then_compose_round_trip(tmp_path, graph_file, double_star):
    graph = graph_file("double_star.g", double_star)
    other = graph_file("path.g", MultiGraph.path(12))
    partition = tmp_path / "double_star.partition"

    decomposed = runner.invoke(app, ["decompose", "--k", "3", graph, "--output", str(partition)])
    same = runner.invoke(app, ["compose", str(partition), "--check", graph])
    different = runner.invoke(app, ["compose", str(partition), "--check", other])

    assert decomposed.exit_code == 0
    assert decomposed.stdout.splitlines()[0] == "tree"
    assert same.exit_code == 0
    assert same.stdout.splitlines()[0] == "12 11"
    assert same.stdout.splitlines()[-1] == "isomorphic=true"
    assert different.exit_code == 1
    assert different.stdout.splitlines()[-1] == "isomorphic=false"


def test_compose_without_torsos_needs_graph(tmp_path, graph_file):
    graph = graph_file("path3.g", MultiGraph.path(3))
    partition = tmp_path / "single.partition"
    partition.write_text("tree\n1 0\nbags\n0: 0 1 2\n", encoding="utf-8")

    missing = runner.invoke(app, ["compose", str(partition)])
    given = runner.invoke(app, ["compose", str(partition), "--graph", graph])

    assert missing.exit_code == 2
    assert given.exit_code == 0
    assert given.stdout == "3 2\n0 1\n1 2\n"


def test_immersion_command(graph_file, k4):
    cycle = graph_file("c4.g", MultiGraph.cycle(4))

    free = runner.invoke(app, ["immersion", cycle, "--k", "2"])
    immersed = runner.invoke(app, ["immersion", k4, "--k", "2"])

    assert free.exit_code == 0
    assert free.stdout.splitlines()[0] == "free k=2"
    assert len(free.stdout.splitlines()) == 4
    assert immersed.exit_code == 1


def test_refute_command(graph_file, double_star, k4):
    graph = graph_file("double_star.g", double_star)

    refuted = runner.invoke(app, ["refute", graph, "--k", "3", "--candidates", "0,6,11"])
    immersed = runner.invoke(app, ["refute", k4, "--k", "2"])
    malformed = runner.invoke(app, ["refute", graph, "--k", "3", "--candidates", "0,x"])

    assert refuted.exit_code == 0
    first = refuted.stdout.splitlines()[0]
    assert first.startswith("vertex=")
    assert first.endswith("bound=5")
    assert any(line.startswith("carving: (") for line in refuted.stdout.splitlines())
    assert immersed.exit_code == 1
    assert malformed.exit_code == 2


def test_play_follows_the_certificate(theta3):
    captured = runner.invoke(app, ["play", theta3, "--k", "3"])
    evaded = runner.invoke(app, ["play", theta3, "--k", "2", "--rounds", "10", "--seed", "5"])

    assert captured.exit_code == 0
    assert captured.stdout.splitlines()[0] == "cost=3 prediction=captured"
    assert captured.stdout.splitlines()[-1] == "outcome: captured@1"
    assert evaded.exit_code == 0
    assert evaded.stdout.splitlines()[0] == "cost=2 prediction=evaded"
    assert evaded.stdout.splitlines()[-1] == "outcome: evaded@10"


def test_gen_command(tmp_path):
    output = tmp_path / "generated.g"

    result = runner.invoke(app, ["gen", "edge-sum:k=3,parts=3:7", "--output", str(output)])
    again = runner.invoke(app, ["gen", "edge-sum:k=3,parts=3:7"])

    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "# edge-sum:k=3,parts=3:7"
    assert result.stdout == again.stdout
    assert output.read_text(encoding="utf-8") == "\n".join(result.stdout.splitlines()[1:]) + "\n"
    assert runner.invoke(app, ["gen", "edge-sum:k=3"]).exit_code == 2


def test_gadget_command(graph_file):
    edge = graph_file("edge.g", MultiGraph.path(2))

    result = runner.invoke(app, ["gadget", edge, "--a", "0", "--b", "1", "--k", "1", "--speed", "3"])
    too_slow = runner.invoke(app, ["gadget", edge, "--a", "0", "--b", "1", "--k", "1", "--speed", "1"])

    assert result.exit_code == 0
    assert result.stdout.splitlines()[:2] == ["# gadget n=2 k=1 s=3 threshold=3", "23 28"]
    assert too_slow.exit_code == 2


@pytest.mark.parametrize(
    "content",
    ["2 1\n0 0\n", "2 2\n0 1\n", "x\n"],
)
def test_malformed_graph_files_exit_2(tmp_path, content):
    path = tmp_path / "bad.g"
    path.write_text(content, encoding="utf-8")

    result = runner.invoke(app, ["degeneracy", str(path)])

    assert result.exit_code == 2
    assert result.stderr


def test_usage_errors_exit_2(tmp_path, theta3):
    assert runner.invoke(app, ["degeneracy", str(tmp_path / "missing.g")]).exit_code == 2
    assert runner.invoke(app, ["degeneracy", theta3, "--speed", "fast"]).exit_code == 2
    assert runner.invoke(app, ["degeneracy", theta3, "--speed", "0"]).exit_code == 2
    assert runner.invoke(app, ["layout", theta3, "--k", "-1"]).exit_code == 2


def test_run_returns_exit_codes(tmp_path, theta3, k4):
    assert run(["degeneracy", theta3]) == 0
    assert run(["decompose", "--k", "2", k4]) == 1
    assert run(["layout", theta3]) == 2
    assert run(["degeneracy", str(tmp_path / "missing.g")]) == 2


def test_exhausted_search_budget_exits_3(monkeypatch, graph_file):
    cycle = graph_file("c6.g", MultiGraph.cycle(6))
    exhausted = DegeneracyService(cut_service=CutService(search_budget=0))
    monkeypatch.setattr("edgeadmit.cli.commands.degeneracy.get_degeneracy_service", lambda: exhausted)

    assert run(["degeneracy", "--speed", "3", cycle]) == 3


THETA3_LAYOUT = "layout speed=inf\n1 0\n0 3\n"
THETA3_HIDEOUT = "hideout k=3 speed=inf\n0 3\n1 3\n"


@pytest.mark.parametrize(
    "certificate",
    [
        "layout speed=inf\n1 0\n0 2\n",
        "layout speed=inf\n1 1\n0 3\n",
        "layout speed=inf\n0 3\n1 0\n",
        "layout speed=2\n1 0\n0 3\n",
        "layout speed=inf\n1 0\n",
        "layout speed=inf\n1 0\n7 3\n",
        "layout speed=inf\n1 0\n1 3\n",
    ],
)
def test_verify_rejects_changed_layout_fields(tmp_path, theta3, certificate):
    path = tmp_path / "theta3.layout"
    path.write_text(certificate, encoding="utf-8")

    result = runner.invoke(app, ["verify", theta3, "--layout", str(path), "--speed", "inf", "--k", "3"])

    assert result.exit_code in (1, 2)


@pytest.mark.parametrize(
    "certificate",
    [
        "hideout k=3 speed=inf\n0 2\n1 3\n",
        "hideout k=4 speed=inf\n0 3\n1 3\n",
        "hideout k=3 speed=1\n0 3\n1 3\n",
        "hideout k=3 speed=inf\n0 3\n",
        "hideout k=3 speed=inf\n0 3\n5 3\n",
    ],
)
def test_verify_rejects_changed_hideout_fields(tmp_path, theta3, certificate):
    path = tmp_path / "theta3.hideout"
    path.write_text(certificate, encoding="utf-8")

    result = runner.invoke(app, ["verify", theta3, "--hideout", str(path), "--speed", "inf", "--k", "2"])

    assert result.exit_code in (1, 2)


def test_verify_accepts_unchanged_theta_certificates(tmp_path, theta3):
    layout = tmp_path / "theta3.layout"
    hideout = tmp_path / "theta3.hideout"
    layout.write_text(THETA3_LAYOUT, encoding="utf-8")
    hideout.write_text(THETA3_HIDEOUT, encoding="utf-8")

    assert runner.invoke(app, ["verify", theta3, "--layout", str(layout), "--speed", "inf", "--k", "3"]).exit_code == 0
    assert runner.invoke(app, ["verify", theta3, "--hideout", str(hideout), "--speed", "inf", "--k", "2"]).exit_code == 0


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10))
def test_verify_rejects_every_changed_layout_line(tmp_path, graph_file, structure_service, seed):
    generated = generate(parse_corpus_spec(f"edge-sum:k=3,parts=3:{seed}"), structure_service)
    graph = graph_file("generated.g", generated.graph)
    certificate = tmp_path / "generated.layout"
    produced = runner.invoke(app, ["layout", graph, "--k", "5", "--output", str(certificate)])
    header, *rows = certificate.read_text(encoding="utf-8").splitlines()
    assert produced.exit_code == 0

    for position, row in enumerate(rows):
        vertex, support = row.split()
        bumped = rows[:position] + [f"{vertex} {int(support) + 1}"] + rows[position + 1:]
        dropped = rows[:position] + rows[position + 1:]
        for changed in (bumped, dropped):
            certificate.write_text("\n".join([header, *changed]) + "\n", encoding="utf-8")
            result = runner.invoke(app, ["verify", graph, "--layout", str(certificate), "--speed", "inf"])
            assert result.exit_code in (1, 2)
