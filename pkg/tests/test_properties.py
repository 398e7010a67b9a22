import unittest
import sys
import os

# Add src and the package root to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from hypothesis import given, settings, strategies as st

from gadgets.synthesis import GadgetSpec, synthesize
from generators.families import generate_family
from orienter.cactus import orient_cactus
from orienter.outerplanar import orient_block, orient_graph
from processing.graph_parser import parse_graph, serialize_graph
from processing.orientation_validator import validate

seeds = st.integers(min_value=0, max_value=2**32)


@st.composite
def gadget_specs(draw):
    length = draw(st.integers(min_value=2, max_value=7))
    domain = draw(st.sampled_from([(1,), (1, 2), (1, 2, 3)]))
    cap = draw(st.integers(min_value=1, max_value=5))
    constraints = draw(st.dictionaries(
        st.integers(min_value=0, max_value=length - 1),
        st.integers(min_value=0, max_value=cap),
        max_size=length,
    ))
    avoid = draw(st.dictionaries(
        st.integers(min_value=0, max_value=length - 1),
        st.frozensets(st.integers(min_value=0, max_value=cap), max_size=2),
        max_size=2,
    ))
    avoid = {p: vals - {constraints[p]} if p in constraints else vals for p, vals in avoid.items()}
    return GadgetSpec.of(length, domain, cap, constraints, avoid)


class TestProperties(unittest.TestCase):

    @settings(max_examples=60, deadline=None)
    @given(seeds, st.integers(min_value=1, max_value=40))
    def test_random_cacti_within_three(self, seed, blocks):
        """Any seeded cactus orients semi-properly with in-weight at most 3"""
        g = generate_family("random_cactus", seed=seed, blocks=blocks).graph
        verdict = validate(g, orient_cactus(g), mu_bound=3, weight_domain=(1, 2))
        self.assertTrue(verdict["is_valid"], verdict["errors"][:3])

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.integers(min_value=3, max_value=40))
    def test_maximal_outerplanar_within_four(self, seed, n):
        """Any seeded triangulated polygon orients with in-weight at most 4"""
        g = generate_family("random_maximal_outerplanar", seed=seed, n=n).graph
        verdict = validate(g, orient_graph(g), mu_bound=4, weight_domain=(1, 2))
        self.assertTrue(verdict["is_valid"], verdict["errors"][:3])

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.integers(min_value=4, max_value=20), st.data())
    def test_block_contract(self, seed, n, data):
        """The designated vertex is a source and its neighbours avoid the forbidden value"""
        g = generate_family("random_maximal_outerplanar", seed=seed, n=n).graph
        s = data.draw(st.integers(min_value=0, max_value=n - 1))
        forbidden = data.draw(st.integers(min_value=0, max_value=4))
        orientation = orient_block(g, s, {forbidden})
        self.assertEqual(orientation.in_weight[s], 0)
        self.assertTrue(all(orientation.in_weight[v] != forbidden for v in g.neighbors(s)))
        self.assertTrue(validate(g, orientation, mu_bound=4)["is_valid"])

    @settings(max_examples=100, deadline=None)
    @given(gadget_specs())
    def test_synthesis_methods_agree(self, spec):
        """Dynamic programming and enumeration find the same gadget or both fail"""
        self.assertEqual(synthesize(spec, "dp"), synthesize(spec, "enumerate"))

    @settings(max_examples=60, deadline=None)
    @given(seeds, st.integers(min_value=1, max_value=12))
    def test_serialization_is_canonical(self, seed, n):
        """Parsing a serialised graph and serialising again is stable"""
        m = seed % (n * (n - 1) // 2 + 1)
        g = generate_family("random_graph", seed=seed, n=n, m=m).graph
        data = serialize_graph(g)
        self.assertEqual(serialize_graph(parse_graph(data)), data)
        self.assertEqual(parse_graph(data), g.canonical())


if __name__ == '__main__':
    unittest.main()
