import os
import random
import subprocess
import sys

import pytest

from pdhyper import _kernel, _strand_py


def _random_masks(rng, n, width):
    return [rng.randrange(1, 1 << width) for _ in range(n)]


def test_backend_name():
    assert _kernel.BACKEND in ("cython", "python")


@pytest.mark.skipif(_kernel._compiled is None, reason="compiled kernel not built")
def test_compiled_matches_python():
    rng = random.Random(7)
    for _ in range(300):
        masks = _random_masks(rng, rng.randint(0, 9), 10)
        for p in (0, 2, 3, 97):
            assert _kernel._compiled.strand_betti(masks, p) == _strand_py.strand_betti(masks, p)


@pytest.mark.skipif(_kernel._compiled is None, reason="compiled kernel not built")
def test_wide_masks_fall_back():
    masks = [1 << 70, (1 << 70) | 1, 2]
    with pytest.raises(OverflowError):
        _kernel._compiled.strand_betti(masks, 0)
    assert _kernel.strand_betti(masks, 0) == _strand_py.strand_betti(masks, 0)


def test_two_generators():
    assert _strand_py.strand_betti([0b011, 0b110]) == [1, 2, 1]
    assert _kernel.strand_betti([0b011, 0b110]) == [1, 2, 1]


def test_pure_environment_switch():
    code = "from pdhyper import _kernel; print(_kernel.BACKEND)"
    env = dict(os.environ, PDHYPER_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
