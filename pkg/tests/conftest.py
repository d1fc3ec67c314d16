"""
共享测试夹具：经典小图与 ≤ 8 个顶点的小图语料
"""

import pytest

from config.settings import settings
from modules.graph_core import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    petersen,
)
from modules.scanner.corpus import atlas_corpus, one_vertex_extensions


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def two_triangles():
    return disjoint_union(complete(3), complete(3))


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def empty4():
    return empty(4)


@pytest.fixture(scope="session")
def atlas():
    """networkx 图谱中 1..7 个顶点的全部图，(graph6, Graph)"""
    return list(atlas_corpus(7))


@pytest.fixture(scope="session")
def eight_vertex_graphs(atlas):
    """8 个顶点的全部 12346 个同构类，由 7 顶点图谱单点扩展得到"""
    return list(one_vertex_extensions(g for _, g in atlas if g.n == 7))


@pytest.fixture(scope="session")
def atlas_triangle_free(atlas):
    from modules.graph_core import is_triangle_free
    return [(g6, g) for g6, g in atlas if is_triangle_free(g)]


@pytest.fixture
def restore_settings():
    """测试内对全局配置的修改在结束后还原"""
    saved = settings.snapshot()
    yield settings
    for section, values in saved.items():
        current = getattr(settings, section)
        current.clear()
        current.update(values)
