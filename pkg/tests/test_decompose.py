import unittest
import sys
import os

# Add src and the package root to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from core.graph import Graph
from decompose.blocks import block_forest
from decompose.classify import GraphClassTag, classify
from decompose.ears import EarDecomposition, EarPeelError, is_ear_peelable, peel_ears
from generators.families import book, cactus_tight, complete, cycle, generate_family, uop


def _edge_set(g: Graph):
    return frozenset((min(u, v), max(u, v)) for u, v in g.edges)


class TestBlockForest(unittest.TestCase):

    def setUp(self):
        self.tight, _ = cactus_tight()

    def test_tight_cactus_blocks(self):
        """Triangle, bridge, triangle in DFS order with their cut vertices as roots"""
        forest = block_forest(self.tight)
        kinds = [b.kind for b in forest.blocks]
        self.assertEqual(kinds, ["cycle", "bridge", "cycle"])
        self.assertEqual([b.root for b in forest.blocks], [None, 2, 3])
        self.assertEqual(forest.cut_vertices, frozenset({2, 3}))

    def test_block_sizes_account_for_vertices(self):
        """Sum of (|B| - 1) over a connected graph's blocks is |V| - 1"""
        for g in (self.tight, uop(3)[0], book(4), generate_family("random_cactus", seed=5, blocks=12).graph):
            forest = block_forest(g)
            self.assertEqual(sum(b.order - 1 for b in forest.blocks), g.vertex_count - 1)

    def test_every_edge_in_exactly_one_block(self):
        """Blocks partition the edge set"""
        g = generate_family("random_cactus", seed=11, blocks=15).graph
        indices = sorted(i for b in block_forest(g).blocks for i in b.edges)
        self.assertEqual(indices, list(range(g.edge_count)))

    def test_roots_seen_before_their_blocks(self):
        """Each block's root lies in an earlier block of the same component"""
        g = generate_family("random_cactus", seed=3, blocks=20).graph
        forest = block_forest(g)
        seen = set(forest.blocks[0].vertices)
        for block in forest.blocks[1:]:
            self.assertIn(block.root, seen)
            self.assertEqual(seen.intersection(block.vertices), {block.root})
            seen.update(block.vertices)

    def test_order_and_root_lookup(self):
        """Blocks are indexed in DFS order and root() reads their cut vertex"""
        forest = block_forest(self.tight)
        self.assertEqual(forest.order, (0, 1, 2))
        self.assertIsNone(forest.root(0))
        self.assertEqual(forest.root(1), 2)
        self.assertEqual(forest.root(2), 3)

    def test_disconnected_and_isolated(self):
        """Components get separate trees; isolated vertices become vertex blocks"""
        g = Graph(7, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        forest = block_forest(g)
        self.assertEqual([b.component for b in forest.blocks], [0, 1, 2])
        self.assertEqual(forest.blocks[2].kind, "vertex")
        self.assertEqual(forest.blocks[2].vertices, (6,))
        self.assertTrue(all(b.root is None for b in forest.blocks))


class TestEarPeeling(unittest.TestCase):

    def test_book_peels(self):
        """A book of three pages peels down to a triangle"""
        g = book(3)
        decomposition = peel_ears(g)
        self.assertEqual(len(decomposition.base_cycle), 3)
        self.assertEqual(len(decomposition.ears), 2)

    def test_replay_rebuilds_block(self):
        """Base cycle plus ears gives back every vertex and edge"""
        for g in (book(5), uop(3)[0], generate_family("random_maximal_outerplanar", seed=4, n=20).graph):
            decomposition = peel_ears(g)
            vertices, edges = decomposition.replay()
            self.assertEqual(vertices, frozenset(g.vertices()))
            self.assertEqual(edges, _edge_set(g))

    def test_designated_vertex_on_base_cycle(self):
        """The requested vertex starts the base cycle"""
        g, _ = uop(3)
        for s in (0, 5, 11):
            decomposition = peel_ears(g, s)
            self.assertEqual(decomposition.base_cycle[0], s)
            self.assertEqual(decomposition.designated, s)
            self.assertEqual(decomposition.replay()[1], _edge_set(g))

    def test_universal_graphs_peel_in_construction_order(self):
        """Peeling UOP(k) recovers the generator's ear order on the original triangle"""
        for k in range(1, 6):
            g, metadata = uop(k)
            decomposition = peel_ears(g)
            self.assertEqual(decomposition.base_cycle, (0, 1, 2))
            peeled = [(ear.internal, frozenset(ear.active_pair)) for ear in decomposition.ears]
            built = [((z,), frozenset((x, y))) for x, z, y in metadata["ear_order"]]
            self.assertEqual(peeled, built, f"k={k}")

    def test_cycle_has_no_ears(self):
        """A cycle is its own base cycle"""
        decomposition = peel_ears(cycle(6), 2)
        self.assertEqual(decomposition.base_cycle, (2, 1, 0, 5, 4, 3))
        self.assertEqual(decomposition.ears, ())

    def test_not_peelable(self):
        """K4 and K(2,3) have no chain with adjacent attachments"""
        k23 = Graph(5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)))
        self.assertFalse(is_ear_peelable(complete(4)))
        self.assertFalse(is_ear_peelable(k23))
        with self.assertRaises(EarPeelError):
            peel_ears(complete(4))

    def test_bad_inputs(self):
        """Blocks must be 2-connected and contain the designated vertex"""
        with self.assertRaises(EarPeelError):
            peel_ears(Graph(4, ((0, 1), (1, 2), (2, 3))))
        with self.assertRaises(EarPeelError):
            peel_ears(cycle(4), 7)

    def test_replay_catches_bad_ears(self):
        """An ear on a non-adjacent pair is refused"""
        from decompose.ears import Ear
        bad = EarDecomposition((0, 1, 2, 3), (Ear((0, 4, 2), (0, 2)),))
        with self.assertRaises(EarPeelError):
            bad.replay()


class TestClassify(unittest.TestCase):

    def test_classes(self):
        """Cacti, ear-peelable graphs and the rest"""
        self.assertEqual(classify(cactus_tight()[0]).tag, GraphClassTag.CACTUS)
        self.assertEqual(classify(cycle(7)).tag, GraphClassTag.CACTUS)
        self.assertEqual(classify(book(3)).tag, GraphClassTag.EAR_PEELABLE)
        self.assertEqual(classify(uop(4)[0]).tag, GraphClassTag.EAR_PEELABLE)
        self.assertEqual(classify(complete(4)).tag, GraphClassTag.UNSUPPORTED)
        self.assertFalse(classify(complete(4)).supported)

    def test_edgeless_graph_is_a_cactus(self):
        """Isolated vertices only"""
        result = classify(Graph(3, ()))
        self.assertEqual(result.tag, GraphClassTag.CACTUS)
        self.assertEqual(len(result.blocks), 3)

    def test_report_shape(self):
        """The dictionary form lists blocks and cut vertices"""
        report = classify(cactus_tight()[0]).to_dict()
        self.assertEqual(report["class"], "cactus")
        self.assertEqual(report["block_count"], 3)
        self.assertEqual(report["cut_vertices"], [2, 3])
        self.assertEqual(report["blocks"][1]["kind"], "bridge")

    def test_maximal_outerplanar_graphs_peel(self):
        """Random triangulated polygons are always ear-peelable"""
        for seed in range(10):
            g = generate_family("random_maximal_outerplanar", seed=seed, n=15).graph
            self.assertEqual(classify(g).tag, GraphClassTag.EAR_PEELABLE)


if __name__ == '__main__':
    unittest.main()
