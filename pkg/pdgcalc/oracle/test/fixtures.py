import pytest

from pdgcalc.model.presets import PRESETS


@pytest.fixture(scope="module", params=list(PRESETS))
def model(request):
    return PRESETS[request.param]


@pytest.fixture(scope="module")
def samples(request):
    return request.config.getoption("--samples", default=200)


@pytest.fixture(scope="module")
def window_size(request):
    return request.config.getoption("--window", default=8)
