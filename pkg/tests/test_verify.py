import pytest

from setlab.verify import SUITES, SuiteResult, run_suites


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"maxset"}))
def test_suite_passes_and_repeats(name):
    first = SUITES[name](11, 6)
    assert first.ok, first.render()
    assert first.render() == SUITES[name](11, 6).render()


def test_maxset_suite_small():
    res = run_suites(["maxset"], 2, 3)[0]
    assert res.ok, res.render()


def test_result_rendering():
    res = SuiteResult("demo", 4)
    res.check(True, "")
    res.check(False, "case 1: broken")
    assert res.render() == "suite demo seed 4: 1 passed, 1 failed\n  FAIL case 1: broken"
    assert not res.ok
