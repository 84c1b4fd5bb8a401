from __future__ import annotations

import random

import pytest

from colorbraid import _kernels_py, kernels
from colorbraid.action import codec

try:
    from colorbraid import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@needs_compiled
def test_backends_agree_on_random_inputs():
    rng = random.Random(3)
    cd = codec(5)
    for _ in range(200):
        n = rng.randint(2, 8)
        letters = [(rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 20))]
        assert compiled.artin_images(n, letters) == _kernels_py.artin_images(n, letters)
        codes = tuple(rng.randrange(len(cd.trans)) for _ in range(n))
        assert compiled.apply_codes(codes, letters, cd.conj_table) == \
            _kernels_py.apply_codes(codes, letters, cd.conj_table)


@needs_compiled
def test_census_labels_agree():
    cd = codec(4)
    assert list(compiled.census_labels(4, 4, cd.pairs, cd.conj_table)) == \
        list(_kernels_py.census_labels(4, 4, cd.pairs, cd.conj_table))


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
