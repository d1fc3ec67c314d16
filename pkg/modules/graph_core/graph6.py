"""
graph6 编解码与边列表文本解析

graph6：每行一个图，ASCII 可打印字符 63..126，可选 ">>graph6<<" 头。
"""

from typing import List, Tuple

from core.exceptions import GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_VERTICES = 68719476735


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> Tuple[int, int]:
    """返回 (n, 头部字节数)"""
    if not data:
        raise GraphFormatError("Empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("Truncated 8-byte length prefix", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("Truncated 4-byte length prefix", offset=len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def from_graph6(text: str) -> Graph:
    """
    解析一行 graph6

    Args:
        text: graph6 文本，允许前导 ">>graph6<<" 头和行尾换行

    Returns:
        解码得到的图

    Raises:
        GraphFormatError: 非法字节、长度前缀错误或尾部多余数据，offset 指向出错字节
    """
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)

    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphFormatError("Non-ASCII character in graph6 string", offset=base + e.start)

    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"Byte {b!r} outside printable graph6 range 63..126", offset=base + i)

    n, head = _decode_n(data)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"Vertex count {n} exceeds graph6 limit", offset=base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[head:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"Expected {nbytes} adjacency bytes for n={n}, found {len(body)}",
            offset=base + len(data),
        )
    if len(body) > nbytes:
        raise GraphFormatError("Trailing garbage after adjacency data", offset=base + head + nbytes)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1

    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("Nonzero padding bits in last adjacency byte", offset=base + len(data) - 1)

    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    """编码为规范 graph6 行（不含头与换行）"""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """
    解析边列表文本：每行 "u v"（0 起始），'#' 开头为注释

    顶点数取最大标号加一；可用 "n N" 行显式声明顶点数以保留孤立点。
    """
    edges: List[Tuple[int, int]] = []
    n = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and parts[1].isdigit():
            n = max(n, int(parts[1]))
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"Malformed edge line: {raw!r}", line_number=line_number)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"Self-loop {u} {v}", line_number=line_number)
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return Graph.from_edges(n, edges)
