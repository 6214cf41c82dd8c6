"""Run every documented example shipped in the library docstrings."""

import doctest

import pytest

from nthderiv import algebra, implicit, jets, oracle, parametric, partitions, verify


@pytest.mark.parametrize("module", [
    partitions, algebra, parametric, implicit, jets, oracle, verify,
], ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
