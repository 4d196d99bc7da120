import pytest

from exotictilt import verify

from conftest import get_rs


@pytest.mark.parametrize("spec", ["A1", "A2"])
def test_all_suites_pass(spec):
    reports = verify.run_suites(get_rs(spec), "all", radius=2, seed=5)
    for rep in reports:
        assert rep.passed, rep.summary()


def test_single_suite_selection(b2):
    reports = verify.run_suites(b2, "order", radius=2)
    names = {r.name.split("[")[0] for r in reports}
    assert names == {"length-invariants", "order-vs-dominance", "omega-group"}
    assert all(r.passed for r in reports)


def test_module_suite_deterministic_per_seed(a2):
    a = verify.run_suites(a2, "module", radius=2, seed=11)
    b = verify.run_suites(a2, "module", radius=2, seed=11)
    assert [(r.name, r.checked) for r in a] == [(r.name, r.checked) for r in b]
    assert all(r.passed for r in a)


def test_unknown_suite_rejected(a1):
    with pytest.raises(ValueError):
        verify.run_suites(a1, "nope", radius=1)
