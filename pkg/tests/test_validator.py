import unittest
import sys
import os

# Add src and the package root to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from core.graph import Graph, Orientation
from processing.graph_parser import StructuralMismatchError
from processing.orientation_validator import OrientationValidator, validate, validate_arcs


class TestOrientationValidator(unittest.TestCase):

    def setUp(self):
        self.validator = OrientationValidator()
        self.triangle = Graph(3, ((0, 1), (1, 2), (0, 2)))

    def test_semi_proper_triangle_accepted(self):
        """0->1, 0->2, 1->2 with unit weights gives in-weights 0, 1, 2"""
        o = Orientation(self.triangle, (1, 2, 2), (1, 1, 1))
        result = self.validator.validate_orientation(self.triangle, o, mu_bound=2, weight_domain=(1, 2))
        self.assertTrue(result["is_valid"])
        self.assertEqual(result["in_weight"], [0, 1, 2])
        self.assertEqual(result["mu"], 2)
        self.assertEqual(result["errors"], [])

    def test_directed_cycle_rejected(self):
        """A directed triangle has equal in-weights on every edge"""
        o = Orientation(self.triangle, (1, 2, 0), (1, 1, 1))
        result = validate(self.triangle, o)
        self.assertFalse(result["is_valid"])
        rules = [v["rule"] for v in result["violations"]]
        self.assertEqual(rules, ["distinct_in_weights"] * 3)
        self.assertIn("no mu bound requested", result["warnings"])

    def test_mu_bound_and_domain(self):
        """In-weight above the bound and weights outside the domain are reported"""
        o = Orientation(self.triangle, (1, 2, 2), (1, 3, 1))
        result = validate(self.triangle, o, mu_bound=3, weight_domain=(1, 2))
        self.assertFalse(result["is_valid"])
        rules = sorted(v["rule"] for v in result["violations"])
        self.assertEqual(rules, ["mu_bound", "weight_domain"])
        self.assertEqual(result["in_weight"], [0, 1, 4])

    def test_raw_arcs_with_zero_weight(self):
        """Non-positive weights are caught before any orientation is built"""
        arcs = [(0, 1, 0), (1, 2, 1), (0, 2, 2)]
        result = validate_arcs(self.triangle, arcs)
        self.assertFalse(result["is_valid"])
        self.assertEqual(result["violations"][0]["rule"], "positive_weights")

    def test_structure_mismatch(self):
        """Arcs must follow the graph's edge order"""
        with self.assertRaises(StructuralMismatchError):
            validate_arcs(self.triangle, [(1, 2, 1), (0, 1, 1), (0, 2, 1)])
        other = Graph(3, ((0, 1), (1, 2)))
        with self.assertRaises(StructuralMismatchError):
            validate(other, Orientation(self.triangle, (1, 2, 2), (1, 1, 1)))

    def test_claimed_in_weights_recomputed(self):
        """A claimed in-weight vector that disagrees with the arcs is a violation"""
        o = Orientation(self.triangle, (1, 2, 2), (1, 1, 1))
        result = self.validator.validate_orientation(self.triangle, o, mu_bound=2, claimed_in_weight=[0, 2, 1])
        self.assertFalse(result["is_valid"])
        self.assertEqual(result["violations"][0]["rule"], "in_weight_recomputed")
        self.assertEqual(result["violations"][0]["vertices"], [1, 2])

    def test_edgeless_graph(self):
        """Isolated vertices are trivially valid with mu 0"""
        g = Graph(2, ())
        result = validate(g, Orientation(g, (), ()), mu_bound=0)
        self.assertTrue(result["is_valid"])
        self.assertEqual(result["mu"], 0)


if __name__ == '__main__':
    unittest.main()
