def pytest_addoption(parser):
    parser.addoption(
        "--pair-samples",
        type=int,
        default=30,
        help="number of random (submodel, element) pairs to classify",
    )
