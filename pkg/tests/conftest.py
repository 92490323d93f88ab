from __future__ import annotations

import pytest

from somos import SequenceBuffer, generate, somos5_spec

SESSION_TERMS = 501


@pytest.fixture(scope="session")
def somos5_values():
    """First 501 Somos-5 terms, generated once per session."""
    return tuple(generate(somos5_spec(), SESSION_TERMS).values())


@pytest.fixture
def somos5_buffer(somos5_values):
    """Factory for fresh full-retention buffers over a Somos-5 prefix."""

    def make(count: int = SESSION_TERMS) -> SequenceBuffer:
        return SequenceBuffer(list(somos5_values[:count]))

    return make
