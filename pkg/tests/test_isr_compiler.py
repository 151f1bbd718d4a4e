import random

import pytest

from rekonfig.errors import PreconditionError
from rekonfig.exact import solve_exact
from rekonfig.graph import RuleKind, is_independent_set
from rekonfig.oracles import CnfFormula, SatMode, sat_decide
from rekonfig.reductions import GadgetTag, add_isolated_pads, inte3sat_to_isr

FIG_FORMULA = CnfFormula(4, ((1, -2, -4), (-1, -3, 4), (2, 3, -4)))


def random_sandwiched(rng: random.Random, n: int, m: int) -> CnfFormula:
    clauses = []
    for _ in range(m):
        lits = [rng.randint(1, n), -rng.randint(1, n)]
        third = rng.randint(1, n)
        lits.append(third if rng.random() < 0.5 else -third)
        rng.shuffle(lits)
        clauses.append(tuple(lits))
    return CnfFormula(n, tuple(clauses))


def test_fig_formula_shape():
    inst, ann = inte3sat_to_isr(FIG_FORMULA, mu=1)
    assert inst.graph.vertex_count == 27
    assert len(inst.start) == len(inst.target) == 12
    assert inst.graph.max_degree == 3
    assert not (inst.start & inst.target)
    assert inst.rule.kind is RuleKind.KTJ and inst.rule.k == 11


def test_fig_formula_is_yes():
    assert sat_decide(FIG_FORMULA, SatMode.MIXED) is not None
    inst, _ = inte3sat_to_isr(FIG_FORMULA, mu=1)
    assert solve_exact(inst).reachable


def test_mu_three_adds_two_pads():
    inst, ann = inte3sat_to_isr(FIG_FORMULA, mu=3)
    pads = ann.vertices_with_tag(GadgetTag.PAD)
    assert len(pads) == 2
    assert all(inst.graph.degree(v) == 0 for v in pads)
    assert set(pads) <= inst.start and set(pads) <= inst.target
    assert inst.rule.k == len(inst.start) - 3


def test_structural_invariants():
    inst, ann = inte3sat_to_isr(FIG_FORMULA, mu=1)
    g = inst.graph
    # variable gadgets: even cycles with alternating true/false tags
    by_var = {}
    for v in range(g.vertex_count):
        if ann.tags[v] in (GadgetTag.TRUE_VERTEX, GadgetTag.FALSE_VERTEX):
            by_var.setdefault(ann.of(v)[1], []).append(v)
    for x, vertices in by_var.items():
        assert len(vertices) % 2 == 0
        internal = [
            (u, v)
            for u, v in g.edges()
            if u in vertices and v in vertices
        ]
        if len(vertices) == 2:
            assert len(internal) == 1  # two-vertex path
        else:
            assert len(internal) == len(vertices)  # a cycle
        for u, v in internal:
            assert ann.tags[u] != ann.tags[v]  # alternation
    # clause gadgets are triangles
    by_clause = {}
    for v in range(g.vertex_count):
        if ann.tags[v] in (GadgetTag.POSITIVE_VERTEX, GadgetTag.NEGATIVE_VERTEX):
            by_clause.setdefault(ann.of(v)[1], []).append(v)
    for h, corners in by_clause.items():
        assert len(corners) == 3
        assert all(g.has_edge(u, v) for u in corners for v in corners if u != v)
    # corner attachments: negative literals point at true vertices
    for v in range(g.vertex_count):
        if ann.tags[v] in (GadgetTag.POSITIVE_VERTEX, GadgetTag.NEGATIVE_VERTEX):
            _, h, slot, lit, occ = ann.of(v)
            outside = [u for u in g.neighbors(v) if ann.of(u)[0] == "var"]
            assert len(outside) == 1
            u = outside[0]
            want_tag = GadgetTag.TRUE_VERTEX if lit < 0 else GadgetTag.FALSE_VERTEX
            assert ann.tags[u] is want_tag
            assert ann.of(u) == ("var", abs(lit), occ)


def test_start_and_target_are_independent():
    inst, _ = inte3sat_to_isr(FIG_FORMULA, mu=2)
    assert is_independent_set(inst.graph, inst.start)
    assert is_independent_set(inst.graph, inst.target)


def test_rejects_bad_inputs():
    with pytest.raises(PreconditionError):
        inte3sat_to_isr(CnfFormula(2, ((1, 2, 1),)), mu=1)  # not sandwiched
    with pytest.raises(PreconditionError):
        inte3sat_to_isr(FIG_FORMULA, mu=0)
    with pytest.raises(PreconditionError):
        inte3sat_to_isr(CnfFormula(2, ((1, -2),)), mu=1)  # not E3


def test_duplicate_literals_keep_degree_three():
    phi = CnfFormula(2, ((1, -1, -1), (2, -2, 1)))
    inst, _ = inte3sat_to_isr(phi, mu=1)
    assert inst.graph.max_degree == 3


def test_answer_preservation_sample():
    rng = random.Random(17)
    for _ in range(12):
        phi = random_sandwiched(rng, rng.randint(2, 4), rng.randint(1, 2))
        want = sat_decide(phi, SatMode.MIXED) is not None
        for mu in (1, 2):
            inst, _ = inte3sat_to_isr(phi, mu=mu)
            assert solve_exact(inst).reachable == want


def test_add_isolated_pads():
    inst, ann = inte3sat_to_isr(FIG_FORMULA, mu=1)
    padded, padded_ann = add_isolated_pads(inst, ann, 2)
    assert padded.graph.vertex_count == inst.graph.vertex_count + 2
    assert len(padded.start) == len(inst.start) + 2
    assert padded.rule == inst.rule
    assert len(padded_ann.vertices_with_tag(GadgetTag.PAD)) == 2
