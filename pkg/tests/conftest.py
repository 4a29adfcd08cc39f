import contextlib
import io
import os

import pytest

from monotoneprob import MomentSystem, load_model
from monotoneprob.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")
GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def data_path(name):
    return os.path.join(DATA, name)


def run_cli(argv):
    """Invoke the CLI in-process; returns (exit_code, stdout_bytes)."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue().encode()


@pytest.fixture(scope="session")
def model_a():
    return load_model(data_path("model_a.json"))


@pytest.fixture(scope="session")
def model_b():
    return load_model(data_path("model_b.json"))


@pytest.fixture(scope="session")
def system_a(model_a):
    return MomentSystem.from_model(model_a, sorted(model_a.variables))


@pytest.fixture(scope="session")
def system_b(model_b):
    return MomentSystem.from_model(model_b, sorted(model_b.variables))
