from ..analysis import brute_force_k_flow, is_flow_admissible
from ..cli.generators import generate_random_cubic_signed, generate_random_multigraph
from ..convert import verify_flow
from ..core import (
    SignedGraph,
    Edge,
    Sign,
    Orientation,
    AWAY_BOTH,
    TOWARD_BOTH,
    BACKWARD,
    canonical_orientation,
    contract_positive_edge,
    switch_vertices,
)
from ..errors import LiftError, NotFlowAdmissible, ReductionError
from ..reduce import (
    LiftRecipe,
    SuppressStep,
    UncontractStep,
    DropLoopStep,
    SwitchStep,
    suppress_degree_two,
    uncontract_vertex,
    reduce_to_cubic,
    lift_flow,
)
from .fixtures import (
    A,
    T,
    dumbbell,
    dumbbell_flow,
    double_negative_loop,
    k4,
    k4_doubled_edge,
    mixed_digon,
    petersen_all_negative,
    triangle,
)
from .graph_test import GraphTest


def _subdivided_dumbbell() -> SignedGraph:
    """Dumbbell whose middle edge runs through vertex 2 as 0-2 positive and 2-1 negative."""
    return SignedGraph.build(3, [(0, 0, "-"), (0, 2, "+"), (2, 1, "-"), (1, 1, "-")])


class TestSuppression(GraphTest):

    def test_positive_path(self):
        g = SignedGraph.build(3, [(0, 1, "+"), (1, 2, "+")])
        reduced, recipe = suppress_degree_two(g)
        self.assertEqual((0, 2), reduced.vertices)
        self.assertEqual((Edge(0, 2, Sign.POSITIVE),), reduced.edges)
        self.assertEqual((2,), recipe.edge_ids)
        self.assertEqual(1, len(recipe.steps))

    def test_sign_product(self):
        g = SignedGraph.build(3, [(0, 1, "+"), (1, 2, "-")])
        reduced, _ = suppress_degree_two(g)
        self.assertEqual((Edge(0, 2, Sign.NEGATIVE),), reduced.edges)

    def test_nothing_to_do(self):
        g = petersen_all_negative()
        reduced, recipe = suppress_degree_two(g)
        self.assertEqual(g, reduced)
        self.assertTrue(recipe.is_empty)

    def test_loop_rejected(self):
        with self.assertRaises(ReductionError):
            suppress_degree_two(SignedGraph.build(1, [(0, 0, "+")]))

    def test_cycle_closing_into_a_loop_rejected(self):
        with self.assertRaises(ReductionError):
            suppress_degree_two(triangle())

    def test_lift_across_suppression(self):
        g = _subdivided_dumbbell()
        reduced, recipe = suppress_degree_two(g)
        self.assertEqual(
            (Edge(0, 0, Sign.NEGATIVE), Edge(1, 1, Sign.NEGATIVE), Edge(0, 1, Sign.NEGATIVE)),
            reduced.edges,
        )
        self.assertEqual((0, 3, 4), recipe.edge_ids)
        tau, values = lift_flow(recipe, g, Orientation((AWAY_BOTH, AWAY_BOTH, TOWARD_BOTH)), (1, 1, 2))
        self.assertEqual(Orientation(((A, A), (T, A), (T, T), (A, A))), tau)
        self.assertEqual((1, 2, 2, 1), values)


class TestUncontraction(GraphTest):

    def test_two_edges(self):
        g = k4_doubled_edge()
        out = uncontract_vertex(g, 0, 0, 1)
        self.assertEqual((0, 1, 2, 3, 4), out.vertices)
        self.assertEqual(Edge(4, 1, Sign.POSITIVE), out.edges[0])
        self.assertEqual(Edge(4, 2, Sign.POSITIVE), out.edges[1])
        self.assertEqual(Edge(0, 4, Sign.POSITIVE), out.edges[7])
        self.assertEqual(3, out.degree(0))
        self.assertEqual(3, out.degree(4))

    def test_loop_supplies_both_ends(self):
        out = uncontract_vertex(double_negative_loop(), 0, 0, 0)
        self.assertEqual(
            (Edge(1, 1, Sign.NEGATIVE), Edge(0, 0, Sign.NEGATIVE), Edge(0, 1, Sign.POSITIVE)),
            out.edges,
        )

    def test_contracting_the_link_restores(self):
        g = k4_doubled_edge().with_signature([2, 4])
        out = uncontract_vertex(g, 1, 0, 3)
        link = out.m - 1
        contracted, _, _, _ = contract_positive_edge(out, canonical_orientation(out), (1,) * out.m, link)
        self.assertEqual(g, contracted)

    def test_errors(self):
        with self.assertRaises(ReductionError):
            uncontract_vertex(k4(), 0, 0, 1)
        with self.assertRaises(ReductionError):
            uncontract_vertex(k4_doubled_edge(), 0, 0, 5)


class TestReduceToCubic(GraphTest):

    def test_cubic_is_unchanged(self):
        g = petersen_all_negative()
        reduced, recipe = reduce_to_cubic(g)
        self.assertEqual(g, reduced)
        self.assertTrue(recipe.is_empty)

    def test_double_loop_becomes_dumbbell(self):
        g = double_negative_loop()
        reduced, recipe = reduce_to_cubic(g)
        self.assertEqual(
            (Edge(1, 1, Sign.NEGATIVE), Edge(0, 0, Sign.NEGATIVE), Edge(0, 1, Sign.POSITIVE)),
            reduced.edges,
        )
        self.assertTrue(is_flow_admissible(reduced))
        (step,) = recipe.steps
        self.assertIsInstance(step, UncontractStep)
        self.assertTrue(step.kept)

        tau, values = lift_flow(recipe, g, Orientation((TOWARD_BOTH, AWAY_BOTH, BACKWARD)), (1, 1, 2))
        self.assertEqual(Orientation((TOWARD_BOTH, AWAY_BOTH)), tau)
        self.assertEqual((1, 1), values)
        self.assertTrue(verify_flow(g, tau, values, 3))

    def test_k4_with_doubled_edge(self):
        g = k4_doubled_edge()
        reduced, recipe = reduce_to_cubic(g)
        self.assertTrue(reduced.is_cubic())
        self.assertTrue(is_flow_admissible(reduced))
        self.assertEqual((2, 3), reduced.vertices)
        splits = [step for step in recipe.steps if isinstance(step, UncontractStep)]
        self.assertEqual([0, 1], [step.vertex for step in splits])
        self.assertEqual([False, False], [step.kept for step in splits])
        self.assertEqual(4, sum(1 for step in recipe.steps if isinstance(step, SuppressStep)))

        found = brute_force_k_flow(reduced, 6)
        tau, values = lift_flow(recipe, g, *found)
        self.assertTrue(verify_flow(g, tau, values, 6))

    def test_rejections(self):
        with self.assertRaises(NotFlowAdmissible):
            reduce_to_cubic(mixed_digon())
        with self.assertRaises(NotFlowAdmissible):
            reduce_to_cubic(SignedGraph.build(2, [(0, 1, "+"), (1, 1, "-")]))
        with self.assertRaises(ReductionError):
            reduce_to_cubic(SignedGraph.build(2, [(0, 0, "-"), (1, 1, "-")]))

    def test_round_trip_on_contracted_cubic_graphs(self):
        checked = 0
        for seed in range(20):
            g = generate_random_cubic_signed(8, 0.0 if seed % 2 == 0 else 0.3, seed)
            positive = next(e for e, edge in enumerate(g.edges) if not edge.is_negative)
            contracted, _, _, _ = contract_positive_edge(g, canonical_orientation(g), (1,) * g.m, positive)
            if not contracted.is_connected() or not is_flow_admissible(contracted):
                continue
            reduced, recipe = reduce_to_cubic(contracted)
            self.assertTrue(reduced.is_cubic())
            self.assertTrue(is_flow_admissible(reduced))
            found = brute_force_k_flow(reduced, 6)
            self.assertIsNotNone(found)
            tau, values = lift_flow(recipe, contracted, *found)
            self.assertTrue(verify_flow(contracted, tau, values, 6))
            checked += 1
        self.assertGreater(checked, 0)


    def test_parallel_digons_of_both_signs(self):
        g = SignedGraph.build(2, [(1, 0, "+"), (0, 1, "+"), (1, 0, "-"), (0, 1, "-")])
        reduced, recipe = reduce_to_cubic(g)
        self.assertEqual((1, 3), reduced.vertices)
        self.assertEqual(
            (Edge(3, 3, Sign.NEGATIVE), Edge(1, 1, Sign.NEGATIVE), Edge(1, 3, Sign.POSITIVE)),
            reduced.edges,
        )
        self.assertEqual((5, 6, 7), recipe.edge_ids)
        splits = [step for step in recipe.steps if isinstance(step, UncontractStep)]
        self.assertEqual([(0, False), (1, True)], [(step.vertex, step.kept) for step in splits])
        self.assertFalse(any(isinstance(step, DropLoopStep) for step in recipe.steps))

        tau, values = lift_flow(recipe, g, *brute_force_k_flow(reduced, 6))
        self.assertTrue(verify_flow(g, tau, values, 6))

    def test_balanced_cycle_reduces_to_nothing(self):
        g = triangle()
        reduced, recipe = reduce_to_cubic(g)
        self.assertEqual(0, reduced.n)
        self.assertTrue(reduced.is_cubic())
        (dropped,) = [step for step in recipe.steps if isinstance(step, DropLoopStep)]
        self.assertEqual((4, Edge(2, 2, Sign.POSITIVE)), dropped.loop)
        self.assertTrue(dropped.isolated)
        self.assertEqual(recipe, LiftRecipe.model_validate_json(recipe.model_dump_json()))

        tau, values = lift_flow(recipe, g, Orientation(()), ())
        self.assertEqual((1, 1, 1), values)
        self.assertTrue(verify_flow(g, tau, values, 2))

    def _lift_some_flow(self, recipe: LiftRecipe, g: SignedGraph, reduced: SignedGraph):
        if reduced.m == 0:
            return lift_flow(recipe, g, Orientation(()), ())
        found = brute_force_k_flow(reduced, 6)
        self.assertIsNotNone(found)
        return lift_flow(recipe, g, *found)

    def test_round_trip_on_random_multigraphs(self):
        checked = splits = 0
        for seed in range(300):
            g = generate_random_multigraph(2 + seed % 4, 7, 0.4, seed)
            if g.is_cubic() or not is_flow_admissible(g):
                continue
            reduced, recipe = reduce_to_cubic(g)
            self.assertTrue(reduced.is_cubic())
            self.assertFalse(any(edge.is_loop and not edge.is_negative for edge in reduced.edges))
            if reduced.m:
                self.assertTrue(is_flow_admissible(reduced))
            tau, values = self._lift_some_flow(recipe, g, reduced)
            self.assertTrue(verify_flow(g, tau, values, 6))
            splits += sum(1 for step in recipe.steps if isinstance(step, UncontractStep))
            checked += 1
            if checked == 25:
                break
        self.assertGreaterEqual(checked, 10)
        self.assertGreater(splits, 0)


class TestLift(GraphTest):

    def test_empty_recipe(self):
        g = dumbbell()
        tau = Orientation(((A, A), (A, T), (T, T)))
        recipe = LiftRecipe.identity(g)
        self.assertEqual((tau, (1, 2, 1)), lift_flow(recipe, g, tau, (1, 2, 1)))

    def test_switch_steps(self):
        g = dumbbell()
        tau, values = dumbbell_flow()
        recipe = LiftRecipe.switching(g, (0,))
        self.assertEqual([SwitchStep(vertex=0)], recipe.steps)
        switched, switched_tau = switch_vertices(g, tau, (0,))
        self.assertEqual(switched, recipe.reduced_graph)
        self.assertEqual((tau, values), lift_flow(recipe, g, switched_tau, values))
        with self.assertRaises(LiftError):
            lift_flow(recipe, g, switched_tau, (1, 1, 1))

    def test_mismatched_graph(self):
        _, recipe = reduce_to_cubic(double_negative_loop())
        with self.assertRaises(LiftError):
            lift_flow(recipe, dumbbell(), Orientation((TOWARD_BOTH, AWAY_BOTH, BACKWARD)), (1, 1, 2))

    def test_balancing_value_checked(self):
        g = double_negative_loop()
        _, recipe = reduce_to_cubic(g)
        with self.assertRaises(LiftError):
            lift_flow(recipe, g, Orientation((TOWARD_BOTH, AWAY_BOTH, BACKWARD)), (1, 1, 3))

    def test_recipe_json(self):
        _, recipe = reduce_to_cubic(k4_doubled_edge())
        self.assertEqual(recipe, LiftRecipe.model_validate_json(recipe.model_dump_json()))
