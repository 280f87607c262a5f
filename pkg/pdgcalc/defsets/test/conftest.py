def pytest_addoption(parser):
    parser.addoption(
        "--formula-samples",
        type=int,
        default=40,
        help="number of random formulas checked against a window",
    )
