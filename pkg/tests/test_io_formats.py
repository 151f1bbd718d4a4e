import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rekonfig.errors import FormatSemanticsError, FormatSyntaxError, RekonfigError
from rekonfig.graph import (
    FeasibilityKind,
    ReconfigInstance,
    ReconfigSequence,
    Rule,
    RuleKind,
)
from rekonfig.io_formats import (
    parse_certificate,
    parse_cnf,
    parse_instance,
    parse_ncl,
    parse_pmr,
    serialize_certificate,
    serialize_cnf,
    serialize_instance,
    serialize_ncl,
    serialize_pmr,
)
from rekonfig.oracles import CnfFormula, enumerate_perfect_matchings

from conftest import brute_feasible, random_graph

FIXTURES = Path(__file__).parent / "fixtures"


def test_instance_fixture_round_trip(c4):
    text = (FIXTURES / "c4_is_ktj1.isr").read_text()
    inst = parse_instance(text)
    assert inst.graph == c4
    assert inst.start == {0, 2} and inst.target == {1, 3}
    assert inst.kind is FeasibilityKind.INDEPENDENT_SET
    assert inst.rule == Rule(RuleKind.KTJ, 1)
    assert parse_instance(serialize_instance(inst)) == inst


def test_instance_semantic_errors():
    base = "p reconfig 4 4 is ktj 1\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
    with pytest.raises(FormatSemanticsError):
        parse_instance(base + "s 1 3\nt 2\n")  # unequal sizes
    with pytest.raises(FormatSemanticsError):
        parse_instance(base + "s 1 2\nt 3 4\n")  # infeasible start


def test_instance_syntax_errors():
    with pytest.raises(FormatSyntaxError):
        parse_instance("p reconfig 2 0 is bogus 1\ns 1\nt 2\n")
    with pytest.raises(FormatSyntaxError) as err:
        parse_instance("p reconfig 2 0 is ktj 1\ne 1\ns 1\nt 2\n")
    assert err.value.line == 2


def test_certificate_round_trip():
    seq = ReconfigSequence((frozenset({0, 2}), frozenset({1, 3})))
    text = serialize_certificate(seq)
    assert parse_certificate(text, 4) == seq


def test_empty_certificate_rejected():
    with pytest.raises(FormatSyntaxError):
        parse_certificate("c nothing here\n", 4)


def test_cnf_fixture_round_trip():
    phi = parse_cnf((FIXTURES / "fig_formula.cnf").read_text())
    assert phi == CnfFormula(4, ((1, -2, -4), (-1, -3, 4), (2, 3, -4)))
    assert parse_cnf(serialize_cnf(phi)) == phi


def test_cnf_errors():
    with pytest.raises(FormatSemanticsError):
        parse_cnf("p cnf 2 1\n3 0\n")
    with pytest.raises(FormatSyntaxError):
        parse_cnf("p cnf 2 1\n1 2\n")  # missing terminating 0
    with pytest.raises(FormatSemanticsError):
        parse_cnf("p cnf 2 2\n1 0\n")  # clause count mismatch


def test_ncl_fixture_round_trip():
    machine, cs, ct = parse_ncl((FIXTURES / "k4.ncl").read_text())
    assert machine.vertex_count == 4 and machine.edge_count == 6
    text = serialize_ncl(machine, cs, ct)
    again = parse_ncl(text)
    assert again == (machine, cs, ct)


def test_ncl_errors():
    head = "p ncl 4 6\n" + "".join(
        f"e {u+1} {v+1} 2\n" for u in range(4) for v in range(u + 1, 4)
    )
    with pytest.raises(FormatSemanticsError):
        parse_ncl(head + "config s\nconfig t\n")  # unoriented edges
    with pytest.raises(FormatSyntaxError):
        parse_ncl(head + "config s\nz 1 2\nconfig t\n")


def test_pmr_fixture_round_trip(c4):
    g, ms, mt = parse_pmr((FIXTURES / "c4.pmr").read_text())
    assert g == c4
    assert ms in enumerate_perfect_matchings(c4)
    assert parse_pmr(serialize_pmr(g, ms, mt)) == (g, ms, mt)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=80, deadline=None)
def test_instance_round_trip_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    g = random_graph(rng, n, rng.uniform(0.1, 0.7))
    kind = rng.choice(list(FeasibilityKind))
    size = rng.randint(0, n)
    family = brute_feasible(g, kind, size)
    if len(family) < 1:
        return
    inst = ReconfigInstance(
        g,
        kind,
        rng.choice(family),
        rng.choice(family),
        Rule(rng.choice(list(RuleKind)), rng.randint(1, n + 1)),
    )
    assert parse_instance(serialize_instance(inst)) == inst


@given(st.text(max_size=200))
@settings(max_examples=200, deadline=None)
def test_parsers_never_crash(text):
    for parser in (parse_instance, parse_cnf, parse_ncl, parse_pmr):
        try:
            parser(text)
        except RekonfigError:
            pass
    try:
        parse_certificate(text, 5)
    except RekonfigError:
        pass
