from itertools import combinations

import pytest

from pqham.families import (
    FermatSpec,
    GF2k,
    MetacirculantSpec,
    block_quotient,
    fermat_fiber_blocks,
    fermat_graph,
    format_family_spec,
    group_orbit,
    metacirculant,
    parse_family_spec,
)
from pqham.graphs import Graph, find_isomorphism, gp, is_isomorphic
from pqham.quotients import is_automorphism, quotient, verify_semiregular


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def line_graph(g):
    es = g.edges()
    return Graph(len(es), [(i, j) for (i, e), (j, f)
                           in combinations(list(enumerate(es)), 2)
                           if set(e) & set(f)])


PET_SPEC = MetacirculantSpec(2, 5, 2, (frozenset({1, 4}), frozenset({0})))


def test_gf2k_arithmetic():
    f4 = GF2k(4)
    assert f4.mul(2, 2) == 3  # x*x = x+1
    assert f4.generator == 2
    f16 = GF2k(16)
    assert f16.mul(2, 8) == 3  # x*x^3 = x^4 = x+1
    assert f16.generator == 2
    assert sorted(f16.dlog_table()) == list(range(1, 16))
    f256 = GF2k(256)
    assert f256.generator == 3  # x is not primitive mod x^8+x^4+x^3+x+1
    assert len(f256.dlog_table()) == 255
    with pytest.raises(ValueError):
        GF2k(8)


def test_metacirculant_petersen():
    g, rho, sigma = metacirculant(PET_SPEC)
    assert is_isomorphic(g, gp(5, 2))
    assert verify_semiregular(g, rho) == (2, 5)
    assert is_automorphism(g, sigma)
    assert group_orbit(10, [rho, sigma]) == set(range(10))


def test_metacirculant_circulant():
    spec = MetacirculantSpec(1, 7, 1, (frozenset({1, 6}),))
    g, rho, sigma = metacirculant(spec)
    c7 = Graph(7, [(i, (i + 1) % 7) for i in range(7)])
    assert is_isomorphic(g, c7)
    assert verify_semiregular(g, rho) == (1, 7)


def test_metacirculant_validation():
    with pytest.raises(ValueError):
        MetacirculantSpec(2, 5, 2, (frozenset({0, 1, 4}), frozenset({0})))
    with pytest.raises(ValueError):
        MetacirculantSpec(2, 5, 2, (frozenset({1, 2}), frozenset({0})))
    with pytest.raises(ValueError):
        MetacirculantSpec(2, 10, 5, (frozenset({1, 9}), frozenset({0})))
    with pytest.raises(ValueError):
        MetacirculantSpec(2, 5, 2, (frozenset({1, 4}),))
    # alpha^mu T_mu = -T_mu violated: alpha=1, T_1={1} with -T_1={4}
    with pytest.raises(ValueError):
        MetacirculantSpec(2, 5, 1, (frozenset({1, 4}), frozenset({1})))


def test_metacirculant_transitive_family():
    for spec in [
        MetacirculantSpec(3, 7, 2, (frozenset({1, 6}), frozenset({0, 3}))),
        MetacirculantSpec(2, 13, 5, (frozenset({1, 12}), frozenset({0}))),
        MetacirculantSpec(4, 5, 2, (frozenset({1, 4}), frozenset({0}),
                                    frozenset({1, 2, 3, 4}))),
    ]:
        g, rho, sigma = metacirculant(spec)
        assert verify_semiregular(g, rho) == (spec.m, spec.n)
        assert is_automorphism(g, sigma)
        assert group_orbit(g.n, [rho, sigma]) == set(range(g.n))


FERMAT_53 = FermatSpec(5, 3, frozenset(), frozenset({1}))


def test_fermat_smallest_is_line_graph_of_petersen():
    g, rho = fermat_graph(FERMAT_53)
    assert g.n == 15 and g.is_regular() and g.valency() == 4
    assert is_isomorphic(g, line_graph(gp(5, 2)))
    assert verify_semiregular(g, rho) == (5, 3)


def test_fermat_block_quotient_complete():
    for spec in [FERMAT_53,
                 FermatSpec(17, 3, frozenset(), frozenset({1})),
                 FermatSpec(17, 5, frozenset({1, 4}), frozenset({1, 2}))]:
        g, rho = fermat_graph(spec)
        assert verify_semiregular(g, rho) == (spec.p, spec.q)
        bq = block_quotient(g, fermat_fiber_blocks(spec))
        assert bq == complete_graph(spec.p)


def test_fermat_orbit_quotient_is_not_complete():
    # the orbit quotient of the semiregular shift differs from the
    # fiber-block quotient: not every pair of orbits is joined
    g, rho = fermat_graph(FERMAT_53)
    q = quotient(g, rho)
    pairs = [(a, b) for a, b in combinations(range(5), 2) if q.d(a, b) == 0]
    assert pairs


def test_fermat_vertex_transitive_small():
    for spec in [FERMAT_53, FermatSpec(17, 3, frozenset(), frozenset({1}))]:
        g, _ = fermat_graph(spec)
        p, q = spec.p, spec.q
        base = (p - 1) * q  # (infinity, 0)
        for target in [0] + [q + r for r in range(q)]:
            assert find_isomorphism(g, g, seed={base: target}) is not None


def test_fermat_validation():
    with pytest.raises(ValueError):
        FermatSpec(17, 5, frozenset(), frozenset())  # T empty
    with pytest.raises(ValueError):
        FermatSpec(17, 5, frozenset(), frozenset({1, 2, 3, 4}))  # T not proper
    with pytest.raises(ValueError):
        FermatSpec(17, 7, frozenset(), frozenset({1}))  # 7 does not divide 15
    with pytest.raises(ValueError):
        FermatSpec(13, 3, frozenset(), frozenset({1}))
    with pytest.raises(ValueError):
        FermatSpec(17, 5, frozenset({1}), frozenset({1}))  # S not symmetric


def test_spec_file_round_trips():
    for spec in [PET_SPEC, FERMAT_53,
                 FermatSpec(17, 5, frozenset({1, 4}), frozenset({1, 2}))]:
        assert parse_family_spec(format_family_spec(spec)) == spec
    with pytest.raises(ValueError):
        parse_family_spec("family=unknown\n")
