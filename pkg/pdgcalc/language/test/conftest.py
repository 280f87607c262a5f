def pytest_addoption(parser):
    parser.addoption(
        "--term-samples",
        type=int,
        default=40,
        help="number of random terms and formulas to print and reparse",
    )
