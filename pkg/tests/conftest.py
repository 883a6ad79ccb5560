import time

import pytest

import ncgraph as ng


@pytest.fixture(scope="session")
def _timed_default_scan():
    start = time.monotonic()
    report = ng.scan_pairs()
    return report, time.monotonic() - start


@pytest.fixture(scope="session")
def default_report(_timed_default_scan):
    """One full default-catalog scan shared by catalog and acceptance tests."""
    return _timed_default_scan[0]


@pytest.fixture(scope="session")
def default_scan_seconds(_timed_default_scan):
    return _timed_default_scan[1]


@pytest.fixture(scope="session")
def catalog_entries(default_report):
    return list(default_report.entries)


@pytest.fixture(scope="session")
def catalog_groups(catalog_entries):
    """Constructed group for every catalog entry, keyed by descriptor."""
    return {e.descriptor: ng.construct(e.descriptor) for e in catalog_entries}
