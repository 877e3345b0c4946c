from __future__ import annotations

import pytest

from corpus import FIXTURES, build


@pytest.fixture(scope="session")
def built_corpus():
    """name -> (fixture, code, dual), built once for the whole run."""
    out = {}
    for f in FIXTURES:
        code = build(f)
        out[f.name] = (f, code, code.dual())
    return out
