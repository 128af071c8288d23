import pathlib

import pytest

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="rewrite the stored CLI transcripts instead of comparing against them",
    )


@pytest.fixture
def golden(request):
    """Compare a string against tests/golden/<name>, or rewrite it with --update-golden."""
    update = request.config.getoption("--update-golden")

    def compare(name, actual):
        path = GOLDEN_DIR / name
        if update:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(actual)
            return
        if not path.exists():
            pytest.fail("missing golden file %s; run pytest --update-golden" % name)
        expected = path.read_text()
        assert actual == expected, "output differs from golden/%s" % name

    return compare
