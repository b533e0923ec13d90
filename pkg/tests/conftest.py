import logging

import pytest

from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import validate_workflow
from wfsound.net.writers import serialize_net
from wfsound.gadgets.examples import left_net, middle_net, right_net
from wfsound.utils.logger import logger


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size random corpora, deselect with -m \"not slow\"")


@pytest.fixture
def left():
    return left_net()


@pytest.fixture
def middle():
    return middle_net()


@pytest.fixture
def right():
    return right_net()


@pytest.fixture
def sequence():
    # i -t-> o, sound for every k
    net = PetriNet(["i", "o"], ["t"], [{"i": 1}], [{"o": 1}])
    return validate_workflow(net, "i", "o")


@pytest.fixture
def leaky():
    # t1 leaves a token in p that t2 turns into a second o
    net = PetriNet(["i", "p", "o"], ["t1", "t2"],
                   [{"i": 1}, {"p": 1}],
                   [{"p": 1, "o": 1}, {"o": 1}])
    return validate_workflow(net, "i", "o")


@pytest.fixture
def pumping():
    # t2 adds a token to o without consuming anything it does not give back
    net = PetriNet(["i", "p", "o"], ["t1", "t2"],
                   [{"i": 1}, {"p": 1}],
                   [{"p": 1}, {"p": 1, "o": 1}])
    return validate_workflow(net, "i", "o")


@pytest.fixture
def disconnected():
    # b is never marked, so neither is o
    net = PetriNet(["i", "a", "b", "o"], ["t1", "t2", "t4"],
                   [{"i": 1}, {"a": 1, "b": 1}, {"a": 1, "b": 1}],
                   [{"a": 1}, {"o": 1}, {"b": 1}])
    return validate_workflow(net, "i", "o")


@pytest.fixture
def write_net(tmp_path):
    """
    Write a workflow net to a file under tmp_path and return its path.
    """
    def write(wf, name="net.net"):
        path = tmp_path / name
        path.write_text(serialize_net(wf), encoding="utf-8")
        return str(path)
    return write


class _LineCollector(logging.Handler):
    def __init__(self):
        super(_LineCollector, self).__init__()
        self.lines = []

    def emit(self, record):
        self.lines.append((record.levelno, record.getMessage()))


@pytest.fixture
def log_lines():
    """
    (level, message) pairs written to the shared logger during the test.
    """
    collector = _LineCollector()
    level = logger.logger.level
    logger.logger.addHandler(collector)
    logger.set_level(logging.DEBUG)
    yield collector.lines
    logger.set_level(level)
    logger.logger.removeHandler(collector)
