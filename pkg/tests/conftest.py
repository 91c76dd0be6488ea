import itertools

import numpy as np
import pytest


def oracle_reduced(amps: np.ndarray, n: int, subset) -> np.ndarray:
    """rho_S by explicit summation over bit strings, independent of the reshape path."""
    subset = list(subset)
    rest = [q for q in range(n) if q not in subset]
    dk = 2 ** len(subset)
    rho = np.zeros((dk, dk), dtype=complex)

    def index(bits_s, bits_r):
        bits = [0] * n
        for q, b in zip(subset, bits_s):
            bits[q] = b
        for q, b in zip(rest, bits_r):
            bits[q] = b
        return int("".join(map(str, bits)), 2)

    keys_s = list(itertools.product((0, 1), repeat=len(subset)))
    for bits_r in itertools.product((0, 1), repeat=len(rest)):
        for i, si in enumerate(keys_s):
            for j, sj in enumerate(keys_s):
                rho[i, j] += amps[index(si, bits_r)] * np.conj(amps[index(sj, bits_r)])
    return rho


def oracle_concurrence(amps, n, subset) -> float:
    rho = oracle_reduced(np.asarray(amps), n, subset)
    p = np.trace(rho @ rho).real
    return float(np.sqrt(max(0.0, 2 * (1 - p))))


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
