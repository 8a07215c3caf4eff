import importlib

import pytest

MODULES = ["lpoly", "series", "grassmann", "strata", "hilb", "plethystic", "quot", "macmahon"]


def _rows():
    for m in MODULES:
        for name, ok in importlib.import_module(f"hilbmot.{m}").invariants():
            yield pytest.param(ok, id=f"{m}:{name}")


@pytest.mark.parametrize("ok", list(_rows()))
def test_invariant(ok):
    assert ok
