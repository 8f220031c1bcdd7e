import os
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from colortri.graph import Graph

_RESULTS: list[str] = []

SNAP_DIR = Path(os.environ.get("COLORTRI_SNAP_DIR", Path(__file__).parent / "data" / "snap"))


def snap_file(name: str) -> Path | None:
    """Locate ``<name>.txt`` or ``<name>.txt.gz`` in the SNAP data directory."""
    for suffix in (".txt", ".txt.gz"):
        p = SNAP_DIR / f"{name}{suffix}"
        if p.exists():
            return p
    return None


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool | None, detail: str):
        status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
        _RESULTS.append(f"[{status}] {criterion}: {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, np.zeros((0, 2), dtype=np.int64))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
