import functools
from pathlib import Path

import pytest

from locdom.graph6 import parse_graph6

CORPORA = Path(__file__).resolve().parent.parent / "corpora"


@functools.lru_cache(maxsize=None)
def corpus_lines(name: str) -> tuple[str, ...]:
    return tuple(
        line.strip()
        for line in (CORPORA / name).read_text().splitlines()
        if line.strip()
    )


@functools.lru_cache(maxsize=None)
def corpus_graphs(name: str):
    return tuple(parse_graph6(line) for line in corpus_lines(name))


@pytest.fixture(scope="session")
def graphs_le5():
    return corpus_graphs("graphs_le5.g6")


@pytest.fixture(scope="session")
def graphs_le6():
    return corpus_graphs("graphs_le6.g6")


@pytest.fixture(scope="session")
def connected_le7():
    return corpus_graphs("connected_le7.g6")


@pytest.fixture(scope="session")
def connected_le8():
    return corpus_graphs("connected_le8.g6")
