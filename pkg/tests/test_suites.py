import pytest

from posetlab.errors import UnknownSuite
from posetlab.suites import SUITES, run_suite

SMALL_BOUNDS = {
    "T2.2": {"max_size": 4},
    "T2.3": {"max_size": 4},
    "T2.5": {"max_size": 4},
    "T3.2": {"max_size": 4},
    "P3.4": {"count": 40, "seed": 3},
    "P3.5": {"max_size": 5},
    "T4.2": {"max_size": 4},
    "T4.5": {"max_size": 4},
    "T5.2": {"max_size": 4},
    "P6.2": {"max_size": 4},
    "L7.2": {"max_size": 4},
    "T7.3": {"max_size": 4},
    "C7.4": {"max_size": 4},
    "NS": {"max_size": 4},
}


@pytest.mark.parametrize("suite", sorted(SMALL_BOUNDS))
def test_suites_pass_at_small_bounds(suite):
    report = run_suite(suite, **SMALL_BOUNDS[suite])
    assert report.examined > 0
    assert report.passed, report.violations[:3]


def test_ns_is_marked_conjecture():
    report = run_suite("NS", max_size=2)
    assert report.conjecture
    assert not run_suite("T5.2", max_size=2).conjecture


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("T9.9")


def test_suite_registry_is_complete():
    assert sorted(SUITES) == sorted(
        ["T2.2", "T2.3", "T2.5", "T3.2", "P3.4", "P3.5", "T4.2", "T4.5",
         "T5.2", "P6.2", "P7.1", "L7.2", "T7.3", "C7.4", "NS"])
