import pytest

from pqham.engine import (
    Certificate,
    Descriptor,
    NotHamiltonianException,
    ProofFailure,
    build_instance,
    dihedral_union_labels,
    format_certificate,
    format_survey,
    graph_fingerprint,
    parse_certificate,
    prove,
    row12_valency_check,
    survey,
    survey_descriptors,
    verify,
)
from pqham.families import MetacirculantSpec
from pqham.graphs import gp


PETERSEN = Descriptor(
    "metacirculant",
    (MetacirculantSpec(2, 5, 2, (frozenset({1, 4}), frozenset({0}))),))


def test_build_instance_families():
    g, rho = build_instance(Descriptor("gp", (7, 2)))
    assert g.n == 14 and rho is not None
    g, rho = build_instance(Descriptor("triple", (4,)))
    assert g.n == 35 and g.valency() == 4
    g, rho = build_instance(Descriptor("dihedral", (13, "S7")))
    assert g.n == 91 and g.valency() == 6
    with pytest.raises(ValueError):
        build_instance(Descriptor("dihedral", (13, "S99")))
    with pytest.raises(ValueError):
        build_instance(Descriptor("nosuch", ()))


def test_dihedral_labels_13():
    from pqham.actions import dihedral_model
    labels = dihedral_union_labels(dihedral_model(13))
    assert sorted(labels) == ["S2", "S3", "S4+", "S4-", "S5", "S6", "S7",
                              "axis+", "axis-"]


def test_prove_and_verify():
    desc = Descriptor("gp", (7, 2))
    cert = prove(desc)
    g, _ = build_instance(desc)
    assert verify(g, cert)
    assert cert.order == 14 and cert.strategy
    # tampering is detected
    bad = Certificate(cert.order, cert.valency, "0" * 16, cert.cycle,
                      cert.strategy, cert.trace)
    assert not verify(g, bad)
    cyc = cert.cycle[:-2] + (cert.cycle[-1], cert.cycle[-2])
    bad = Certificate(cert.order, cert.valency, cert.fingerprint, cyc,
                      cert.strategy, cert.trace)
    assert not verify(g, bad)
    assert not verify(gp(7, 3), cert)


def test_certificate_round_trip():
    cert = prove(Descriptor("dihedral", (13, "S7")))
    again = parse_certificate(format_certificate(cert))
    assert again == cert
    assert "descriptor=dihedral(13,S7)" in cert.trace


def test_petersen_is_the_exception():
    with pytest.raises(NotHamiltonianException):
        prove(Descriptor("gp", (5, 2)))
    with pytest.raises(NotHamiltonianException):
        prove(PETERSEN)


def test_prove_strategies():
    assert prove(Descriptor("omega", (5, 0))).strategy == "omega-blocks"
    assert prove(Descriptor("dihedral", (13, "S7"))).strategy == \
        "quotient-lift"
    c = prove(Descriptor("dihedral", (13, "S4-")))
    assert c.strategy == "isomorph-transfer"
    assert any(t.startswith("isomorph_of=") for t in c.trace)


def test_fingerprint_distinguishes_graphs():
    assert graph_fingerprint(gp(7, 2)) != graph_fingerprint(gp(7, 3))
    assert graph_fingerprint(gp(7, 2)) == graph_fingerprint(gp(7, 2))


def test_budget_exhaustion_is_proof_failure():
    with pytest.raises(ProofFailure):
        prove(Descriptor("triple", (4,)), budget=10)


def test_row12_valency_check():
    assert row12_valency_check(1, eps=1, d=3) == {18: True, 16: True}
    assert row12_valency_check(1, eps=-1, d=4) == {54: True, 64: True}
    assert row12_valency_check(2, valency=16) is False
    assert row12_valency_check(2, valency=60) is True
    with pytest.raises(ValueError):
        row12_valency_check(1, eps=1, d=4)  # 2^3+1 = 9 not prime
    with pytest.raises(ValueError):
        row12_valency_check(2, valency=7)
    with pytest.raises(ValueError):
        row12_valency_check(3)


def test_survey_descriptors_growth():
    assert len(survey_descriptors(9)) == 0
    assert [str(d) for d in survey_descriptors(10)] == \
        ["metacirculant(m=2,n=5,alpha=2)"]
    assert len(survey_descriptors(35)) == 6


def test_survey_small():
    rows = survey(15)
    assert [r.status for r in rows] == ["exception", "hamiltonian"]
    out = format_survey(rows)
    assert "exception" in out and "hamiltonian" in out
    csv = format_survey(rows, csv=True)
    assert csv.splitlines()[0].startswith("descriptor,order")
