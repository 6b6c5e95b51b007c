import hypothesis
import pytest

from diptych import corpus

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def groupoids():
    return corpus.groupoids()


@pytest.fixture(scope="session")
def functors():
    return corpus.functors()
