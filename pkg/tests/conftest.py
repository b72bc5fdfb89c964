import pytest

from ordered_hamming import SchemeParams, structure_report

SUITE = (
    ((2,), 1),
    ((3,), 1),
    ((2,), 2),
    ((2,), 3),
    ((2, 2), 1),
    ((2, 3), 1),
    ((2, 2), 2),
    ((2, 2, 2), 1),
)


@pytest.fixture(scope="session")
def report_for():
    """Memoized structure reports; the big instances are expensive to remeasure."""
    cache = {}

    def get(q, n):
        key = (tuple(q), n)
        if key not in cache:
            cache[key] = structure_report(SchemeParams(*key))
        return cache[key]

    return get


@pytest.fixture(scope="session")
def suite_params():
    return [SchemeParams(q, n) for q, n in SUITE]
