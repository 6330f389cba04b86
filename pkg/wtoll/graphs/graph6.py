"""
Bit-exact graph6 reader and writer.

::

    >>> from wtoll.graphs import generators
    >>> from wtoll.graphs.graph6 import encode_graph6, parse_graph6
    >>> encode_graph6(generators.path_graph(4))
    'Ch'
    >>> parse_graph6("Ch")
    Graph(order=4, edges=[(0, 1), (1, 2), (2, 3)])
    >>> parse_graph6(">>graph6<<Dhc")
    Graph(order=5, edges=[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])

"""
from typing import Iterator, List, Tuple

from ..exceptions import Graph6Error
from .bases import Graph

HEADER = ">>graph6<<"


def _encode_order(order: int) -> str:
    if order <= 62:
        return chr(order + 63)
    if order <= 258047:
        return "~" + "".join(chr(((order >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(
        chr(((order >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
    )


def _decode_order(data: List[int]) -> Tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 record")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated order field")
        order = 0
        for value in data[2:8]:
            order = (order << 6) | value
        return order, 8
    if len(data) < 4:
        raise Graph6Error("truncated order field")
    order = 0
    for value in data[1:4]:
        order = (order << 6) | value
    return order, 4


def _upper_triangle(order: int) -> Iterator[Tuple[int, int]]:
    for column in range(1, order):
        for row in range(column):
            yield row, column


def encode_graph6(graph: Graph) -> str:
    bits = [
        1 if graph.adjacency[row] >> column & 1 else 0
        for row, column in _upper_triangle(graph.order)
    ]
    bits.extend([0] * (-len(bits) % 6))
    characters = []
    for index in range(0, len(bits), 6):
        value = 0
        for bit in bits[index : index + 6]:
            value = (value << 1) | bit
        characters.append(chr(value + 63))
    return _encode_order(graph.order) + "".join(characters)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    data = [ord(character) - 63 for character in text]
    if any(not 0 <= value <= 63 for value in data):
        raise Graph6Error(f"character out of range in {text!r}")
    order, offset = _decode_order(data)
    if order < 1:
        raise Graph6Error("graph6 record describes an empty graph")
    bit_count = order * (order - 1) // 2
    expected = (bit_count + 5) // 6
    payload = data[offset:]
    if len(payload) != expected:
        raise Graph6Error(
            f"expected {expected} data bytes for order {order}, got {len(payload)}"
        )
    bits = [(value >> shift) & 1 for value in payload for shift in range(5, -1, -1)]
    if any(bits[bit_count:]):
        raise Graph6Error("non-zero padding bits")
    edges = [
        pair for pair, bit in zip(_upper_triangle(order), bits[:bit_count]) if bit
    ]
    return Graph.from_edge_list(order, edges)
