import os
from unittest import mock

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("dev", max_examples=100, deadline=None)
settings.register_profile(
    "ci",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(autouse=True)
def clean_depth_env():
    with mock.patch.dict(os.environ, {"TSLD_DEPTH": ""}):
        yield


@pytest.fixture
def program_file(tmp_path):
    def write(text: str, name: str = "program.pl"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
