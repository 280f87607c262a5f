def pytest_addoption(parser):
    parser.addoption(
        "--chifn-samples",
        type=int,
        default=60,
        help="number of random chi-functions checked against a window",
    )
