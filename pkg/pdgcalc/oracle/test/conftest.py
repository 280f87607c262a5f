def pytest_addoption(parser):
    parser.addoption(
        "--samples",
        type=int,
        default=200,
        help="draws per property in the oracle suite tests",
    )
    parser.addoption(
        "--window",
        type=int,
        default=8,
        help="level bound of the brute-force windows",
    )
