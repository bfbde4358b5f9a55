import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeadmit.exceptions.testkit import CorpusSpecError, GadgetError, OracleBudgetError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.structure import FreeCertificate, ImmersionWitness
from edgeadmit.testkit.corpus import generate, parse_corpus_spec, random_cop_strategy, random_immersion_steps
from edgeadmit.testkit.gadget import expected_order, gadget
from edgeadmit.testkit.oracles import brute_cut, brute_degeneracy
from strategies import SPEEDS

GADGET_CASES = [
    (MultiGraph.path(2), 0, 1, 0),
    (MultiGraph.path(2), 0, 1, 1),
    (MultiGraph.path(3), 0, 2, 0),
    (MultiGraph.path(3), 0, 2, 1),
    (MultiGraph.from_pairs(3, [(0, 1)]), 0, 2, 0),
    (MultiGraph.from_pairs(3, [(0, 1)]), 0, 2, 1),
    (MultiGraph.complete(3), 0, 1, 0),
    (MultiGraph.complete(3), 0, 1, 1),
    (MultiGraph.theta(2), 0, 1, 1),
    (MultiGraph.from_pairs(3, [(0, 1), (1, 2), (1, 2)]), 0, 2, 1),
]


def test_gadget_of_single_edge_has_expected_order():
    instance = gadget(MultiGraph.path(2), 0, 1, 1, 3)

    assert expected_order(2, 1, 3) == 23
    assert instance.graph.number_of_vertices() == 23
    assert instance.source_order == 2
    assert len(instance.b_vertices) == 4
    assert len(instance.c_vertices) == 2


def test_gadget_role_map():
    instance = gadget(MultiGraph.path(3), 0, 2, 1, 2)
    copies = 1 + 3 + 1

    for c_vertex in instance.c_vertices:
        assert instance.graph.degree(c_vertex) == copies
    for i in range(1, 4):
        for route in instance.q_family(i):
            assert len(route) == 3
            assert instance.names[route[1]].startswith(f"p_{i}_")
    for j, b_vertex in enumerate(instance.b_vertices, start=1):
        routes = instance.p_family(j)
        assert [route[0] for route in routes] == list(instance.c_vertices)
        assert all(route[-1] == b_vertex and len(route) == 3 for route in routes)
    assert instance.names[instance.c_vertices[0]] == "c_1"
    assert instance.names[instance.a] == "a"
    assert instance.names[instance.b_vertices[0]] == "copy_1/orig_2"
    assert instance.graph.number_of_vertices() == expected_order(3, 1, 2)


@pytest.mark.parametrize(
    ("a", "b", "k", "speed"),
    [(0, 0, 1, 3), (0, 9, 1, 3), (0, 1, -1, 3), (0, 1, 1, 1), (0, 1, 1, None)],
)
def test_gadget_rejects_bad_parameters(a, b, k, speed):
    with pytest.raises(GadgetError):
        gadget(MultiGraph.path(2), a, b, k, speed)


@pytest.mark.parametrize(("graph", "a", "b", "k"), GADGET_CASES)
def test_gadget_keeps_the_cut_at_every_copy(cut_service, graph, a, b, k):
    instance = gadget(graph, a, b, k, 3)
    expected = brute_cut(graph, a, b, 3)

    for b_vertex in instance.b_vertices:
        assert cut_service.min_s_cut(instance.graph, instance.a, b_vertex, 3).size == expected


@pytest.mark.slow
@pytest.mark.parametrize(("graph", "a", "b", "k"), GADGET_CASES)
def test_gadget_encodes_the_cut_question(degeneracy_service, graph, a, b, k):
    instance = gadget(graph, a, b, k, 3)

    verdict = degeneracy_service.check_degeneracy(instance.graph, 3, k + graph.number_of_vertices())

    assert verdict.bounded == (brute_cut(graph, a, b, 3) <= k)


@pytest.mark.parametrize(
    ("graph", "x", "y", "speed", "expected"),
    [
        (MultiGraph.theta(3), 0, 1, None, 3),
        (MultiGraph.path(3), 0, 2, 2, 1),
        (MultiGraph.cycle(4), 0, 2, None, 2),
        (MultiGraph.cycle(4), 0, 2, 1, 0),
    ],
)
def test_brute_cut_examples(graph, x, y, speed, expected):
    assert brute_cut(graph, x, y, speed) == expected


@pytest.mark.parametrize("speed", SPEEDS)
def test_brute_degeneracy_examples(speed):
    assert brute_degeneracy(MultiGraph.theta(3), speed) == 3
    assert brute_degeneracy(MultiGraph.path(3), speed) == 1
    assert brute_degeneracy(MultiGraph.complete(4), speed) == 3


def test_brute_degeneracy_refuses_large_graphs():
    with pytest.raises(OracleBudgetError):
        brute_degeneracy(MultiGraph.path(9), None)


def test_generate_is_deterministic():
    spec = parse_corpus_spec("edge-sum:k=3,parts=3:7")

    first, second = generate(spec), generate(spec)

    assert first.graph == second.graph
    assert first.steps == second.steps
    assert first.graph.sorted_vertices() == tuple(range(first.graph.number_of_vertices()))


def test_generate_random_respects_size():
    generated = generate(parse_corpus_spec("random:n=5,m=7:3"))

    assert generated.graph.number_of_vertices() == 5
    assert generated.graph.number_of_edges() == 7


@pytest.mark.parametrize("seed", range(5))
def test_bounded_kind_is_almost_bounded(structure_service, seed):
    graph = generate(parse_corpus_spec(f"bounded:n=8,k=3:{seed}")).graph

    assert graph.max_degree() <= 3
    assert structure_service.is_almost_bounded(graph, 3)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("seed", range(5))
def test_edge_sum_kind_is_theta_free(structure_service, degeneracy_service, k, seed):
    generated = generate(parse_corpus_spec(f"edge-sum:k={k},parts=3:{seed}"), structure_service)

    assert isinstance(structure_service.theta_free(generated.graph, k), FreeCertificate)
    assert all(step.degree <= k for step in generated.steps)
    assert degeneracy_service.edge_degeneracy(generated.graph, None).delta <= 2 * k - 1


@pytest.mark.parametrize("seed", range(5))
def test_planted_theta_kind_immerses_theta(structure_service, seed):
    generated = generate(parse_corpus_spec(f"planted-theta:k=3:{seed}"), structure_service)
    u, v = generated.planted

    assert generated.graph.multiplicity(u, v) >= 4
    witness = structure_service.theta_free(generated.graph, 3)
    assert isinstance(witness, ImmersionWitness)
    assert structure_service.verify_witness(generated.graph, witness)


def test_corpus_spec_text_reads_back():
    spec = parse_corpus_spec("bounded:k=2,n=5:11")

    assert str(spec) == "bounded:k=2,n=5:11"
    assert parse_corpus_spec(str(spec)) == spec
    assert parse_corpus_spec("random::0").params == {}


@pytest.mark.parametrize(
    "text",
    ["random:n=3", "nope::1", "random:n:1", "random:x=1:1", "random:n=a:1", "random::x"],
)
def test_parse_corpus_spec_rejects_malformed_text(text):
    with pytest.raises(CorpusSpecError):
        parse_corpus_spec(text)


def test_generate_rejects_out_of_range_parameters():
    with pytest.raises(CorpusSpecError):
        generate(parse_corpus_spec("random:n=0:1"))


def test_random_cop_strategy_respects_budget():
    graph = MultiGraph.cycle(5)

    cop = random_cop_strategy(graph, 2, random.Random(4))

    assert cop.cost == 2
    assert set(cop.blocks) == graph.vertices
    assert random_cop_strategy(MultiGraph.path(2), 3, random.Random(4)).cost == 1


@pytest.mark.slow
@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_immersion_never_raises_admissibility(degeneracy_service, seed, count):
    graph = generate(parse_corpus_spec(f"random:n=6,m=9:{seed}")).graph
    immersed, steps = random_immersion_steps(graph, random.Random(seed), count)

    assert len(steps) <= count
    assert degeneracy_service.edge_degeneracy(immersed, None).delta <= degeneracy_service.edge_degeneracy(graph, None).delta
