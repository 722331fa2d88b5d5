#!/usr/bin/env python3
"""Smoke tests for the python extension module."""

import json
import sys

import fqdigraph as fq


def example_f25_doc():
    table = [[0, 5, 1], [5, 10, 5], [2, 5, 0]]
    cls = lambda t: 0 if t == 0 else (1 if t == 1 else 2)
    rows = [[table[cls(y)][cls(x)]] for x in range(25) for y in range(25)]
    return {"field": {"p": 5, "e": 2, "modulus": [2, 4, 1]}, "l": 1,
            "table": rows}


def test_field_arithmetic():
    F = fq.Field(5, 2, modulus=[2, 4, 1])
    assert (F.p, F.e, F.q) == (5, 2, 25)
    assert F.modulus == [2, 4, 1]
    assert F.add(3, 4) == 2
    assert F.mul(2, 3) == 1
    assert F.mul(5, 5) == 8
    assert F.coeffs(13) == [3, 2]
    assert F.index_of([3, 2]) == 13
    g = F.primitive_element()
    assert F.exp_of_primitive(F.log(g)) == g
    seen = {F.exp_of_primitive(k) for k in range(24)}
    assert len(seen) == 24
    assert F.subfield_elements(1) == [0, 1, 2, 3, 4]

    try:
        F.inv(0)
    except fq.Error as ex:
        assert "DivisionByZero" in str(ex)
    else:
        raise AssertionError("inv(0) must raise")

    try:
        fq.Field(6, 1)
    except fq.Error as ex:
        assert "NotPrime" in str(ex)
    else:
        raise AssertionError("Field(6, 1) must raise")


def test_analyze_worked_example():
    F, f = fq.parse_instance_json(json.dumps(example_f25_doc()))
    s = fq.analyze(F, f)
    assert s.parity == fq.Parity.Odd
    assert s.d == 1
    assert s.el == 2
    assert s.count == 3
    assert s.orders == [(125, 1), (250, 2)]
    assert s.strong is False
    assert s.W0_basis == [[1, 0]]
    assert s.W_basis == [[1, 0]]

    A = fq.analyze_full(F, f)
    origin = fq.Vertex(0, [0])
    desc = fq.component_of(F, A, origin)
    assert desc.degenerate is True
    comp = fq.materialize(F, A, desc)
    assert len(comp) == 125
    assert origin in comp

    got = fq.theorem_partition(F, A)
    want = fq.scc(fq.build_explicit(F, f))
    assert fq.compare_partitions(got, want).ok is True
    assert sorted(len(c) for c in want) == [125, 250, 250]


def test_witness_path():
    F, f = fq.parse_instance_json(json.dumps(example_f25_doc()))
    A = fq.analyze_full(F, f)
    u = fq.Vertex(0, [0])
    comp = fq.materialize(F, A, fq.component_of(F, A, u))
    v = comp[-1]
    walk = fq.witness_path(F, A, u, v)
    assert walk[0] == u and walk[-1] == v
    assert len(walk) - 1 <= 3 + 6 * A.structure.d * (F.p - 1)
    for tail, head in zip(walk, walk[1:]):
        assert fq.is_arc(F, f, tail, head)

    assert fq.witness_path(F, A, u, u) == []

    w = fq.Vertex(1, [1])
    assert fq.same_component(F, A, u, w) is False
    try:
        fq.witness_path(F, A, u, w)
    except fq.Error as ex:
        assert "NotSameComponent" in str(ex)
    else:
        raise AssertionError("cross-component walk must raise")


def test_monomial_fast_path():
    s = fq.analyze_monomial(2, 2, 3, 3)
    assert s.strong is False
    assert s.count == 2
    assert s.orders == [(8, 2)]
    assert s.divisors == [(1, 3), (2, 1)]
    assert (s.d, s.q_s, s.e_s) == (3, 3, 1)

    big = fq.analyze_monomial(3, 18, 19684, 19684)
    assert big.count == 9842

    try:
        fq.analyze_monomial(2, 63, 1, 1)
    except fq.TooLarge:
        pass
    else:
        raise AssertionError("order past 2**64 must raise")

    F = fq.Field(2, 2)
    comp = fq.monomial_component_of(F, 3, 3, fq.Vertex(0, [0]))
    got = sorted(fq.vertex_index(F, v) for v in comp)
    f = fq.make_monomial_funcspec(F, 3, 3)
    classes = fq.scc(fq.build_explicit(F, f))
    origin = fq.vertex_index(F, fq.Vertex(0, [0]))
    want = next(c for c in classes if origin in c)
    assert got == want


def test_power_subgroups():
    F = fq.Field(7)
    assert fq.power_subgroup(F, 2).elements == [1, 2, 4]
    assert fq.power_subgroup(F, 3).elements == [1, 6]
    assert fq.power_subgroup(F, 6).kbar == 6

    rep = fq.subgroup_checks(fq.Field(2, 4), 5, 3)
    assert rep.all_pass is True
    assert [c.pass_ for c in rep.checks] == [True, True, True]


def test_verify_roundtrip():
    F, f = fq.parse_instance_json(json.dumps(example_f25_doc()))
    case = fq.verify_case(F, f)
    assert case.ok is True
    assert case.components == 3

    spec = fq.SweepSpec()
    spec.fields = [(3, 1), (2, 2)]
    spec.ls = [1]
    spec.per = 3
    spec.seed = 11
    cases = fq.run_sweep(spec)
    assert len(cases) == 6
    assert all(c.ok for c in cases)
    want_seeds = [fq.case_seed(11, q, 1, i) for q in (3, 4) for i in range(3)]
    assert [c.seed for c in cases] == want_seeds

    replayed = fq.verify_case(
        fq.Field(cases[0].p, cases[0].e),
        fq.make_random_table(fq.Field(cases[0].p, cases[0].e), cases[0].l,
                             cases[0].seed),
        seed=cases[0].seed, random=True)
    assert replayed.ok and replayed.seed == cases[0].seed


def test_schema_errors():
    try:
        fq.parse_instance_json('{"field":')
    except fq.SchemaError as ex:
        assert "invalid JSON" in str(ex)
    else:
        raise AssertionError("truncated document must raise")

    try:
        fq.parse_instance_json(json.dumps({"field": {"p": 5, "e": 1}}))
    except fq.SchemaError:
        pass
    else:
        raise AssertionError("missing function form must raise")


def test_dot_and_diameter():
    F = fq.Field(3)
    f = fq.make_monomial_funcspec(F, 1, 1)
    g = fq.build_explicit(F, f)
    assert (g.n, g.q, g.l) == (9, 3, 1)
    dot = fq.to_dot(g)
    assert dot.startswith("digraph {\n") and dot.count("->") == 27
    assert fq.diameter(g) == 3

    d = fq.derive(F, f)
    assert d.f00 == [0]
    assert d.g == [[0], [0], [0]]

    poly = fq.interpolate(F, f)
    assert poly.form == fq.FuncForm.Poly


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} python checks passed")


if __name__ == "__main__":
    main()
