from hypothesis import settings

settings.register_profile("thorough", max_examples=2000, deadline=None)
settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption(
        "--axiom-samples",
        type=int,
        default=300,
        help="draws per property when running the axiom suite on presets",
    )
