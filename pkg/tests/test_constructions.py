import pytest

from fqdecomp.constructions import (SuiteLimits, build_constructions, pq_two_decompositions,
                                    theorem_suite, verify_fq_invariance)
from fqdecomp.expr import parse_function
from fqdecomp.gf import make_field
from fqdecomp.moebius import enumerate_gamma

from conftest import field, point_values, pointwise_compose


def test_p3_expansion():
    ctx = field(3)
    assert build_constructions(ctx).P_q == parse_function("x^6+x^4+x^2", ctx)


def test_h_q_and_degrees():
    for q in (2, 3, 4, 5):
        cs = build_constructions(field(q))
        assert cs.h_q == parse_function(f"(x^{q + 1}+x+1)/x^{q}", cs.ctx)
        assert cs.P_q.degree == q * (q - 1)
        assert cs.f_q.degree == q ** 3 - q


@pytest.mark.parametrize("p,k", [(2, 4), (3, 4)])
def test_f_q_pointwise(p, k):
    # f_q = h_q o P_q, and f_q o u = f_q for every unit u, checked by values
    cs = build_constructions(make_field(p))
    ext = make_field(p, k)
    assert 2 * cs.f_q.degree < ext.q + 1
    fv = point_values(cs.f_q, ext)
    assert fv == pointwise_compose(point_values(cs.h_q, ext), point_values(cs.P_q, ext), ext)
    for u in enumerate_gamma(cs.ctx):
        assert pointwise_compose(fv, point_values(u.to_ratfunc(), ext), ext) == fv


@pytest.mark.parametrize("q", [2, 3, 4])
def test_verify_fq_invariance(q):
    assert verify_fq_invariance(field(q))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_two_decompositions_of_p_q(q):
    d1, d2 = pq_two_decompositions(field(q))
    assert d1.recomposes() and d2.recomposes()
    if q > 2:
        assert d1.degrees == (q - 1, q) and d2.degrees == (q, q - 1)
    else:
        assert d1.length == d2.length == 1


@pytest.mark.parametrize("q", [2, 3, 4])
def test_theorem_suite_passes(q):
    results = theorem_suite(field(q))
    assert len(results) == 14
    bad = [(r.check, r.witness) for r in results if r.status != "pass"]
    assert not bad


def test_suite_reports_budget_instead_of_running():
    limits = SuiteLimits(fq_invariance_q=2, fixfield_gamma_q=2, decomposition_q=2, joint_q=2)
    results = {r.check: r for r in theorem_suite(field(3), limits)}
    assert results["f_q_fixed_by_gamma"].status == "budget_exceeded"
    assert results["joint_generator_theorem"].status == "budget_exceeded"
    assert results["gamma0_chain_lengths"].status == "pass"
    assert set(results["gamma0_chain_lengths"].as_dict()) == {"check", "q", "status", "witness"}
