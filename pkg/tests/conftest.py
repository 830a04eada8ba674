"""Shared helpers: independent oracles used across the test modules."""

import numpy as np
import pytest

from longrun.series import Panel, Series

LCG_A = 6364136223846793005
LCG_C = 1442695040888963407
LCG_M = 2 ** 64


def lcg_states(seed: int, n: int):
    """Exact integer LCG stream, evaluated with Python big ints."""
    out = []
    state = seed % LCG_M
    for _ in range(n):
        state = (LCG_A * state + LCG_C) % LCG_M
        out.append(state)
    return out


def lcg_uniforms(seed: int, n: int):
    return [s / LCG_M for s in lcg_states(seed, n)]


def normal_eq_solve(X, y):
    """Normal-equations least squares (X'X)^-1 X'y, the brute-force oracle."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.linalg.solve(X.T @ X, X.T @ y)


def make_series(values, name="s", start=(2000, 1)) -> Series:
    return Series(name, start, np.asarray(values, dtype=float))


def make_panel(*columns, labels=None, start_index=24000) -> Panel:
    data = np.column_stack([np.asarray(c, dtype=float) for c in columns])
    labels = tuple(labels) if labels else tuple(f"c{i}" for i in range(data.shape[1]))
    periods = np.arange(start_index, start_index + data.shape[0])
    return Panel(labels, periods, data)


@pytest.fixture
def walk_pair():
    """Two independent seeded random walks as a panel (length 500, seed 16)."""
    from longrun.synth import ProcessSpec, generate

    identity = ((1.0, 0.0), (0.0, 1.0))
    return generate(ProcessSpec(kind="var", length=500, seed=16, coefficients=(identity,)))


@pytest.fixture
def coint_pair():
    """Seeded cointegrated pair with slope 2 (length 500, seed 5)."""
    from longrun.synth import ProcessSpec, generate

    return generate(ProcessSpec(kind="cointegrated_pair", length=500, seed=5, beta=2.0))
