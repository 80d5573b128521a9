"""Shared fixtures: the full classification run is expensive, build it once."""

import time
from types import SimpleNamespace

import pytest

from tpg import classify


@pytest.fixture(scope="session")
def classification_report():
    return classify.classify_all()


@pytest.fixture(scope="session")
def cli_classify(tmp_path_factory):
    """Two back-to-back `tpg classify` runs for determinism and timing."""
    from tpg import cli

    out1 = tmp_path_factory.mktemp("classify-run1")
    t0 = time.perf_counter()
    code1 = cli.run(["--out", str(out1), "classify"])
    seconds = time.perf_counter() - t0
    out2 = tmp_path_factory.mktemp("classify-run2")
    code2 = cli.run(["--out", str(out2), "classify"])
    return SimpleNamespace(
        code1=code1, code2=code2, out1=out1, out2=out2, seconds=seconds)
