"""Run the docstring examples shipped with the library modules."""

import doctest

import pytest

from flagslice import (cli, gaussian, geometry, homology, permutations, slmh,
                       slnr, supq)


@pytest.mark.parametrize("module", [
    permutations, gaussian, geometry, slnr, slmh, supq, homology, cli,
])
def test_module_doctests(module):
    failures, _ = doctest.testmod(module, verbose=False)
    assert failures == 0
