"""One test per acceptance criterion; each prints its pass/fail line.

These are the binding checks: a criterion must both produce the right
verdict and finish inside its wall-clock budget.
"""

import pytest

from pachner import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.CRITERIA, ids=[c.name for c in acceptance.CRITERIA]
)
def test_criterion(criterion):
    result = criterion.run()
    print(result.line())
    assert result.passed, result.line()
    assert result.seconds < result.budget, result.line()


def test_registry_lookup():
    assert acceptance.by_name("pentagon-equation").budget == 5.0
    with pytest.raises(KeyError):
        acceptance.by_name("nonsense")


def test_run_all_honors_selection():
    results = acceptance.run_all(["interval-solution"])
    assert len(results) == 1
    assert results[0].name == "interval-solution"
    assert results[0].ok
