import unittest
import sys
import os

# Add src and the package root to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from core.graph import Graph, Orientation
from processing.graph_parser import (
    GraphFormatError,
    GraphTextParser,
    StructuralMismatchError,
)


class TestGraphTextParser(unittest.TestCase):

    def setUp(self):
        self.parser = GraphTextParser()

    def test_parse_edge_list(self):
        """Header plus one edge per line"""
        g = self.parser.parse_graph("3 2\n0 1\n2 1\n")
        self.assertEqual(g.vertex_count, 3)
        self.assertEqual(g.edges, ((0, 1), (2, 1)))

    def test_bytes_and_missing_final_newline(self):
        """Bytes input and a missing trailing LF are accepted"""
        g = self.parser.parse_graph(b"2 1\n0 1")
        self.assertEqual(g.edges, ((0, 1),))

    def test_format_errors_carry_line_numbers(self):
        """Each malformed input reports the offending line"""
        cases = [
            ("", 1),
            ("3 x\n", 1),
            ("3 1\n0 5\n", 2),
            ("3 2\n0 1\n1 1\n", 3),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 2\n0 1\n", 3),
            ("3 1\n0 1\n1 2\n", 3),
            ("3 1\n0  1\n", 2),
        ]
        for text, line in cases:
            with self.assertRaises(GraphFormatError) as ctx:
                self.parser.parse_graph(text)
            self.assertEqual(ctx.exception.line, line, text)

    def test_serialize_is_canonical(self):
        """Serialization sorts edges and ends with a single LF"""
        g = Graph(3, ((2, 1), (1, 0)))
        self.assertEqual(self.parser.serialize_graph(g), b"3 2\n0 1\n1 2\n")

    def test_orientation_round_trip(self):
        """Orientation lines follow the graph's edge order"""
        g = self.parser.parse_graph("3 2\n0 1\n1 2\n")
        o = Orientation(g, (1, 1), (1, 2))
        text = self.parser.serialize_orientation(o)
        self.assertEqual(text, b"3 2\n0 1 1\n2 1 2\n")
        self.assertEqual(self.parser.parse_orientation(text, g), o)

    def test_orientation_mismatch(self):
        """Arcs on the wrong edge or a wrong header are structural mismatches"""
        g = self.parser.parse_graph("3 2\n0 1\n1 2\n")
        with self.assertRaises(StructuralMismatchError):
            self.parser.parse_orientation("3 2\n1 2 1\n0 1 1\n", g)
        with self.assertRaises(StructuralMismatchError):
            self.parser.parse_orientation("4 2\n0 1 1\n1 2 1\n", g)
        with self.assertRaises(GraphFormatError):
            self.parser.parse_orientation("3 2\n0 1 0\n1 2 1\n", g)


if __name__ == '__main__':
    unittest.main()
