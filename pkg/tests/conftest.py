import os

import pytest
from hypothesis import HealthCheck, settings

# CI runners are slow enough to trip the 'too_slow' health check on the flow engine.
settings.register_profile("ci", suppress_health_check=(HealthCheck.too_slow,), deadline=None)
settings.register_profile("dev", deadline=None, max_examples=60)
settings.load_profile("ci" if "CI" in os.environ else "dev")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    for key in list(os.environ):
        if key.startswith("MULTISEG_"):
            monkeypatch.delenv(key)
