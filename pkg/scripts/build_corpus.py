#!/usr/bin/env python3
"""
语料导出脚本

把全部小图（≤ 8 个顶点）或种子固定的 G(n, p) 随机图写成 graph6 文件，
供 scan / bounds 子命令和测试使用。
"""

import argparse
import sys
from pathlib import Path

import networkx as nx

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from modules.graph_core import Graph, is_triangle_free
from modules.scanner import atlas_corpus
from utils.file_manager import FileManager
from utils.logger import setup_logger


def random_graphs(count: int, n_min: int, n_max: int, p: float, seed: int):
    """第 i 个图的顶点数与种子都由 (seed, i) 确定"""
    for i in range(count):
        n = n_min + (seed + i) % (n_max - n_min + 1)
        yield Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed + i))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out", help="output graph6 file (default: data/corpora/corpus.g6)")
    parser.add_argument("--atlas", type=int, help="all graphs with at most N <= 8 vertices")
    parser.add_argument("--random", type=int, default=0, help="number of G(n, p) graphs")
    parser.add_argument("--n-min", type=int, default=9)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--p", type=float, default=0.3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--triangle-free", action="store_true")
    args = parser.parse_args(argv)

    logger = setup_logger("build_corpus", level=settings.LOGGING_CONFIG["level"])
    out = args.out or settings.get_data_path("corpora") / "corpus.g6"

    graphs = []
    if args.atlas:
        graphs.extend(g for _, g in atlas_corpus(args.atlas))
    if args.random:
        graphs.extend(random_graphs(args.random, args.n_min, args.n_max, args.p, args.seed))
    if args.triangle_free:
        graphs = [g for g in graphs if is_triangle_free(g)]

    count = FileManager().write_graph6(graphs, out)
    logger.info(f"Wrote {count} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
