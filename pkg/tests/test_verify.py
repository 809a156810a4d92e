import pytest

from spincover.verify import ALIASES, CHECKS, run_suite


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_each_check_passes_at_g2(name):
    rep = CHECKS[name](2)
    assert rep.passed, rep.details


def test_aliases_resolve():
    assert all(v in CHECKS for v in ALIASES.values())
    (rep,) = run_suite(2, ["bot"])
    assert rep.name == "2g" and rep.passed


def test_unknown_theorem():
    with pytest.raises(KeyError):
        run_suite(2, ["nope"])


def test_pinned_genus():
    (rep,) = run_suite(theorems=["an"], g=3)
    assert rep.details["pairs"] == 256
