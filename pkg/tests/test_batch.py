"""Batch kernels: scalar agreement, backend parity, env-flag selection."""

import os
import subprocess
import sys

import numpy as np
import pytest

from sltrust import angles_of, combine, magnitude_ratio, make_opinion, to_cartesian
from sltrust import batch
from sltrust._kernels import numpy_backend
from sltrust.sampling import sample_simplex

try:
    from sltrust._kernels import numba_backend
except ImportError:  # pragma: no cover
    numba_backend = None


def _split(rows):
    rows = np.ascontiguousarray(rows, dtype=np.float64)
    return tuple(np.ascontiguousarray(rows[:, i]) for i in range(rows.shape[1]))


@pytest.fixture(scope="module")
def opinion_rows():
    return sample_simplex(4000, seed=31)


@pytest.fixture(scope="module")
def pair_rows():
    return sample_simplex(4000, seed=32), sample_simplex(4000, seed=33)


class TestScalarAgreement:
    def test_combine_matches_scalar(self, pair_rows):
        ts, cs = pair_rows
        got = batch.combine_many(ts, cs)
        for i in range(0, len(ts), 40):
            want = combine(make_opinion(*ts[i]), make_opinion(*cs[i]))
            assert np.allclose(got[i], want.components(), atol=1e-12)

    def test_cartesian_matches_scalar(self, opinion_rows):
        got = batch.to_cartesian_many(opinion_rows)
        for i in range(0, len(opinion_rows), 40):
            p = to_cartesian(make_opinion(*opinion_rows[i]))
            assert np.allclose(got[i], (p.x, p.y), atol=1e-14)

    def test_angles_match_scalar(self, opinion_rows):
        got = batch.angles_many(opinion_rows)
        for i in range(0, len(opinion_rows), 40):
            a = angles_of(make_opinion(*opinion_rows[i]))
            want = (a.alpha, a.beta, a.gamma, a.delta, a.epsilon)
            assert np.allclose(got[i], want, atol=1e-12)

    def test_magnitude_ratio_matches_scalar(self, opinion_rows):
        got = batch.magnitude_ratio_many(opinion_rows)
        for i in range(0, len(opinion_rows), 40):
            assert got[i] == pytest.approx(
                magnitude_ratio(make_opinion(*opinion_rows[i])), abs=1e-13
            )

    def test_round_trip_through_cartesian(self, opinion_rows):
        back = batch.from_cartesian_many(batch.to_cartesian_many(opinion_rows))
        assert np.allclose(back, opinion_rows, atol=1e-12)


@pytest.mark.skipif(numba_backend is None, reason="numba not installed")
class TestBackendParity:
    """The compiled loops and the vectorized fallback must agree closely."""

    def test_combine_parity(self, pair_rows):
        ts, cs = pair_rows
        args = _split(ts) + _split(cs)
        jit = np.column_stack(numba_backend.combine_many(*args))
        vec = np.column_stack(numpy_backend.combine_many(*args))
        assert np.allclose(jit, vec, atol=1e-12)

    def test_combine_parity_with_vertex_confidence(self, opinion_rows):
        tb, td, tu = _split(opinion_rows)
        for vertex in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
            cb = np.full_like(tb, vertex[0])
            cd = np.full_like(tb, vertex[1])
            cu = np.full_like(tb, vertex[2])
            jit = np.column_stack(numba_backend.combine_many(tb, td, tu, cb, cd, cu))
            vec = np.column_stack(numpy_backend.combine_many(tb, td, tu, cb, cd, cu))
            assert np.allclose(jit, vec, atol=1e-12)

    def test_geometry_parity(self, opinion_rows):
        b, d, u = _split(opinion_rows)
        for fn in ("cartesian_many", "angles_many", "magnitude_ratio_many"):
            jit = np.column_stack(np.atleast_2d(getattr(numba_backend, fn)(b, d, u)))
            vec = np.column_stack(np.atleast_2d(getattr(numpy_backend, fn)(b, d, u)))
            assert np.allclose(jit, vec, atol=1e-12)


class TestBackendSelection:
    def test_active_backend_reported(self):
        assert batch.backend_name() in ("numba", "numpy")

    def test_env_flag_forces_numpy(self):
        code = (
            "from sltrust import batch; print(batch.backend_name())"
        )
        env = dict(os.environ, SL_TRUST_BACKEND="numpy")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "numpy"

    def test_bad_flag_rejected(self):
        code = (
            "import numpy as np\n"
            "from sltrust import batch\n"
            "batch.magnitude_ratio_many(np.full((2, 3), 1.0 / 3.0))\n"
        )
        env = dict(os.environ, SL_TRUST_BACKEND="cuda")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode != 0
        assert "SL_TRUST_BACKEND" in out.stderr

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            batch.to_cartesian_many(np.zeros((4, 4)))
        with pytest.raises(ValueError):
            batch.combine_many(np.zeros((3, 3)), np.zeros((4, 3)))
