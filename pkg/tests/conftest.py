import pytest


@pytest.fixture(autouse=True)
def _no_ambient_config(monkeypatch):
    # tests must not pick up a config file from the environment
    monkeypatch.delenv("DIMORB_CONFIG", raising=False)
