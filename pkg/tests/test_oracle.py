import json

import pytest

from bernstein_hecke import HeckeAlgebra, load_config, group_algebra_oracle, run_relation_suite
from bernstein_hecke.oracle import CHECKS, check_params_and_walls, subword_lower_set

from helpers import FIXTURES, algebra, config


class BrokenQuadratic(HeckeAlgebra):
    """Harness mutation: T_s T_s is replaced by q T_1 (the (q - 1) T_s term is dropped)."""

    def _left_gen_basis(self, s, y):
        G = self.group
        sy = G.mul(G.gens[s], y)
        if G.length(sy) > G.length(y):
            return ((sy, self.q[0].constant(1)),)
        return ((sy, self.q[s]),)


def broken(name):
    cfg = load_config(name)
    return BrokenQuadratic(cfg.validate(), cfg.params(), cfg.name)


def test_group_oracle_window_zero():
    r = group_algebra_oracle(algebra("a1_root_lattice"), 0)
    assert r.passed and r.cases == 1


@pytest.mark.parametrize("name", ["a1_root_lattice", "a1_weight_lattice", "a1_torsion"])
def test_group_oracle_a1_window_4(name):
    assert group_algebra_oracle(algebra(name), 4).passed


def test_relation_suite_catches_dropped_quadratic_term():
    # dropping (q - 1) T_s is invisible at v = 1, so the exact relation check must catch it
    alg = broken("a1_root_lattice")
    assert group_algebra_oracle(alg, 2).passed
    report = run_relation_suite(alg, window=2, only={"iwahori_matsumoto_relations"})
    assert not report.passed
    cx = report.failures()[0].counterexample
    assert cx == {"case": "quadratic s1", "lhs": "v^2*T[1]", "rhs": "v^2*T[1] + (v^2 - 1)*T[s1]"}


def test_group_oracle_negative_control():
    class Twisted(HeckeAlgebra):
        # T_s T_s = T_s instead of the quadratic relation: wrong even at v = 1
        def _left_gen_basis(self, s, y):
            G = self.group
            sy = G.mul(G.gens[s], y)
            if G.length(sy) > G.length(y):
                return ((sy, self.q[0].constant(1)),)
            return ((y, self.q[0].constant(1)),)

    cfg = load_config("a1_root_lattice")
    r = group_algebra_oracle(Twisted(cfg.validate(), cfg.params(), cfg.name), 2)
    assert not r.passed
    assert (r.counterexample["a"], r.counterexample["b"]) == ("s1", "s1")
    assert r.counterexample["expected"] == "T[1]"


@pytest.mark.parametrize("name", FIXTURES)
def test_suite_passes_window_4(name):
    report = run_relation_suite(algebra(name), 4, 0, name, config(name).root_labels)
    assert report.passed, report.to_table()
    assert sorted(c.name for c in report.checks) == sorted(CHECKS)


def test_suite_a1_window_6():
    report = run_relation_suite(algebra("a1_root_lattice"), 6)
    assert report.passed


def test_suite_records_transitivity():
    rep = check_params_and_walls(algebra("su6_ramified"), "su6_ramified", config("su6_ramified").root_labels)
    assert "family(2chi_1): transitive=true, L(H0)=L(H1)" in rep.details
    rep = check_params_and_walls(algebra("so_ramified"), "so_ramified", config("so_ramified").root_labels)
    assert any(d.startswith("family(2chi_1): transitive=false") for d in rep.details)


def test_report_is_deterministic():
    a = run_relation_suite(algebra("a1_torsion"), 3, seed=5).to_json()
    fresh = HeckeAlgebra.from_config(load_config("a1_torsion"))
    b = run_relation_suite(fresh, 3, seed=5).to_json()
    assert a == b
    data = json.loads(a)
    assert [c["name"] for c in data["checks"]] == sorted(CHECKS)
    assert data["seed"] == 5


def test_failing_check_carries_counterexample():
    report = run_relation_suite(broken("a1_root_lattice"), 2)
    assert not report.passed
    for c in report.failures():
        assert c.counterexample
    table = report.to_table()
    assert "FAIL" in table and "check(s) failed" in table


def test_subword_lower_set_small():
    G = algebra("a1_root_lattice").group
    s1, s0 = G.gens[0], G.gens[1]
    b = G.mul(s1, s0)
    assert subword_lower_set(G, b) == {G.identity, s1, s0, b}
