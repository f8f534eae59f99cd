"""Shared fixtures: derived operators are expensive enough to cache per session."""

import pytest

from betasf.selberg import bulk_limit, eliminate, specialize_circular


@pytest.fixture(scope="session")
def finite_operators():
    """z-side scalar operators keyed by beta."""
    return {
        beta: eliminate(specialize_circular(beta)).operator
        for beta in (2, 4, 6, 8)
    }


@pytest.fixture(scope="session")
def bulk_operators(finite_operators):
    """Bulk scaling limits keyed by beta."""
    return {beta: bulk_limit(op) for beta, op in finite_operators.items()}
