"""Tests for the error type."""

import pytest

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet


class TestWfsoundError:
    def test_message(self):
        e = WfsoundError(ERR.not_on_path, "x is not on a path from i to o.", data={"node": "x"})
        assert str(e) == "x is not on a path from i to o."
        assert e.code == ERR.not_on_path
        assert e.data == {"node": "x"}

    def test_without_message(self):
        e = WfsoundError(ERR.exceeded)
        assert str(e) == "exceeded"
        assert e.data is None

    def test_describe(self):
        e = WfsoundError(ERR.not_enabled, "Step 1: transition u6 is not enabled.",
                         data={"transition": "u6", "index": 1})
        assert e.describe() == "not_enabled: Step 1: transition u6 is not enabled. index=1, transition=u6"

    def test_code_names(self):
        assert ERR.name_of(ERR.generation_failed) == "generation_failed"
        assert ERR.name_of(12345) == "error 12345"

    def test_raised_by_the_net(self):
        net = PetriNet(["p"], ["t"], [{"p": 1}], [{"p": 1}])
        with pytest.raises(WfsoundError) as e:
            net.place_index("q")
        assert e.value.describe() == "unknown_place: Unknown place q. place=q"
