import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--acceptance",
        action="store_true",
        default=False,
        help="run the full-scale acceptance tests (10^4 suite draws, W=32)",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance: full-scale run, needs --acceptance")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--acceptance"):
        return
    skip = pytest.mark.skip(reason="needs --acceptance")
    for item in items:
        if "acceptance" in item.keywords:
            item.add_marker(skip)
