import pytest

from ringtoric.graph import Graph, parse_graph


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n - 1)) + ((0, n - 1),))


def complete(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def k23() -> Graph:
    return Graph(5, tuple((a, b) for a in (0, 1) for b in (2, 3, 4)))


def two_squares() -> Graph:
    # 0-1-2-3-0 and 1-4-5-2, sharing edge 1-2
    return Graph(6, ((0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)))


def wheel(spokes: int) -> Graph:
    rim = tuple((i, i % spokes + 1) for i in range(1, spokes + 1))
    return Graph(spokes + 1, tuple((0, i) for i in range(1, spokes + 1)) + rim)


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


NINE_VERTEX = """\
# first appearance fixes the numbering T R B C L RD RU LD LU
T R
R B
B C
C L
B RD
B RU
B LD
B LU
T L
C R
L B
RU RD
LU LD
"""


def nine_vertex() -> Graph:
    return parse_graph(NINE_VERTEX)


@pytest.fixture
def k4():
    return complete(4)
