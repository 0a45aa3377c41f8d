import pytest

from logdiv.examples import EXAMPLES, example
from logdiv.reproduce import reproduce

MATCHING = [ident for ident in EXAMPLES if ident != "lfrad-c5"]


@pytest.mark.parametrize("ident", MATCHING)
def test_reproduce_matches(ident):
    rep = reproduce(ident)
    assert rep.ok, [c.to_json() for c in rep.checks if not c.ok]
    assert rep.checks


def test_literal_lfrad_instance_disagrees():
    # with a = 2, b = 3 fixed the Liouville ideal has dimension 6, not 7
    rep = reproduce("lfrad-c5")
    observed = {c.name: c.observed for c in rep.checks}
    assert observed == {"liouville_dimension": 6, "tilde_dimension": 5, "liouville_cm": "holds"}
    assert not rep.ok


def test_unknown_example():
    with pytest.raises(KeyError):
        example("nope")
