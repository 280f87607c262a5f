def pytest_addoption(parser):
    parser.addoption(
        "--piece-samples",
        type=int,
        default=40,
        help="number of random terms compared with pointwise evaluation",
    )
