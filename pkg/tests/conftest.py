"""Shared fixtures and helpers for the test suite."""

import itertools

import pytest

from c2webs.ladders import LadderContext


def words_up_to(n, include_empty=False):
    """All words in the letters 1, 2 of length at most n."""
    out = [""] if include_empty else []
    for k in range(1, n + 1):
        out.extend("".join(t) for t in itertools.product("12", repeat=k))
    return out


@pytest.fixture(scope="session")
def ctx():
    """One shared ladder context so diagram/evaluation caches persist."""
    return LadderContext()
