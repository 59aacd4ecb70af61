import io
import logging
import tempfile
from contextlib import redirect_stdout, redirect_stderr
from pathlib import Path
from typing import List, Tuple
from ..analysis import is_flow_admissible
from ..cache import NoCache, SimpleCache
from ..cli.formats import SgfDocument, parse_sgf, serialize_sgf, parse_flw, serialize_flw
from ..cli.generators import generate_random_cubic_signed, generate_random_multigraph, petersen
from ..cli.main import main, exit_code_for
from ..cli.sweep import (
    signatures_up_to,
    sampled_signatures,
    run_sweep,
    format_report,
    worker_settings,
    configure_worker,
)
from ..context import ctx
from ..core import SignedGraph, Edge, Sign
from ..errors import FormatError, GeneratorError, NotCubic, InvariantBreach, ReductionError
from ..reduce import LiftRecipe
from .fixtures import (
    PETERSEN_EDGES,
    dumbbell,
    dumbbell_flow,
    double_negative_loop,
    k4,
    petersen_all_negative,
    petersen_all_positive,
)
from .graph_test import GraphTest


class TestSgf(GraphTest):

    def test_parse(self):
        g = parse_sgf("sgf 1\n2 1\n0 1 -\n")
        self.assertEqual((0, 1), g.vertices)
        self.assertEqual((Edge(0, 1, Sign.NEGATIVE),), g.edges)

        g = parse_sgf("# a positive loop\nsgf 1\n1 1\n0 0 +\n")
        self.assertEqual((Edge(0, 0, Sign.POSITIVE),), g.edges)
        self.assertTrue(g.has_loops())

    def test_error_lines(self):
        cases = [
            ("sgf 2\n2 1\n0 1 -\n", 1),
            ("sgf 1\n2 1\n0 2 -\n", 3),
            ("# comment\nsgf 1\n2 1\n0 1 x\n", 4),
            ("sgf 1\n2 2\n0 1 -\n", 3),
            ("sgf 1\n2 one\n", 2),
            ("sgf 1\n2 1\n0  1 -\n", 3),
            ("sgf 1\n-1 0\n", 2),
            ("# counts\nsgf 1\n2 -3\n", 3),
        ]
        for text, line in cases:
            with self.assertRaises(FormatError) as cm:
                parse_sgf(text)
            self.assertEqual(line, cm.exception.line, text)
            self.assertTrue(str(cm.exception).startswith(f"line {line}: "))

    def test_crlf_rejected(self):
        with self.assertRaises(FormatError):
            parse_sgf("sgf 1\r\n2 1\r\n0 1 -\r\n")

    def test_serialize(self):
        g = petersen_all_negative()
        text = serialize_sgf(g)
        self.assertTrue(text.startswith("sgf 1\n10 15\n0 1 -\n"))
        self.assertEqual(g, parse_sgf(text))

    def test_relabelling(self):
        g = SignedGraph((3, 7), (Edge(7, 3, Sign.NEGATIVE), Edge(3, 3, Sign.POSITIVE)))
        self.assertEqual("sgf 1\n2 2\n1 0 -\n0 0 +\n", serialize_sgf(g))

    def test_document_validation(self):
        with self.assertRaises(ValueError):
            SgfDocument(n=2, m=2, edges=[(0, 1, Sign.POSITIVE)])


class TestFlw(GraphTest):

    def test_serialize(self):
        tau, values = dumbbell_flow()
        self.assertEqual("flw 1\n3\n0 a a 1\n1 a t 2\n2 t t 1\n", serialize_flw(tau, values))

    def test_parse(self):
        doc = parse_flw("flw 1\n3\n2 t t 1\n0 a a 1\n# middle edge\n1 a t 2\n")
        self.assertEqual(dumbbell_flow(), doc.to_flow(dumbbell()))

    def test_errors(self):
        cases = [
            ("flw 1\n2\n0 a a 1\n0 a a 1\n", 4),
            ("flw 1\n1\n0 a x 1\n", 3),
            ("flw 1\n1\n3 a a 1\n", 3),
            ("flw 1\n2\n0 a a 1\n", 3),
            ("flw 1\n", 2),
            ("flw 1\n-2\n", 2),
        ]
        for text, line in cases:
            with self.assertRaises(FormatError) as cm:
                parse_flw(text)
            self.assertEqual(line, cm.exception.line, text)

    def test_flow_must_fit_graph(self):
        tau, values = dumbbell_flow()
        doc = parse_flw(serialize_flw(tau, values))
        with self.assertRaises(FormatError):
            doc.to_flow(double_negative_loop())
        # edge 1 of the dumbbell is positive, a/a is a negative-edge orientation
        doc = parse_flw("flw 1\n3\n0 a a 1\n1 a a 2\n2 t t 1\n")
        with self.assertRaises(FormatError):
            doc.to_flow(dumbbell())


class TestGenerators(GraphTest):

    @staticmethod
    def _pairs(g: SignedGraph) -> List[Tuple[int, int]]:
        return [(min(e.end1, e.end2), max(e.end1, e.end2)) for e in g.edges]

    def test_smallest(self):
        g = generate_random_cubic_signed(4, 0.0, 0)
        self.assertTrue(g.is_cubic())
        self.assertEqual([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], self._pairs(g))
        self.assertEqual([], list(g.negative_edges()))

    def test_simple_and_cubic(self):
        for seed in range(10):
            g = generate_random_cubic_signed(10, 0.5, seed)
            self.assertTrue(g.is_cubic())
            self.assertFalse(g.has_loops())
            pairs = self._pairs(g)
            self.assertEqual(len(pairs), len(set(pairs)))

    def test_deterministic(self):
        self.assertEqual(
            generate_random_cubic_signed(12, 0.3, 7),
            generate_random_cubic_signed(12, 0.3, 7),
        )

    def test_all_negative(self):
        g = generate_random_cubic_signed(8, 1.0, 2)
        self.assertEqual(12, len(list(g.negative_edges())))

    def test_rejected_arguments(self):
        for n, p in ((5, 0.0), (2, 0.0), (6, 1.5)):
            with self.assertRaises(GeneratorError):
                generate_random_cubic_signed(n, p, 0)

    def test_random_multigraph(self):
        for seed in range(10):
            g = generate_random_multigraph(5, 9, 0.4, seed)
            self.assertEqual(5, g.n)
            self.assertEqual(9, g.m)
            self.assertTrue(g.is_connected())
        self.assertEqual(
            generate_random_multigraph(4, 8, 0.5, 3),
            generate_random_multigraph(4, 8, 0.5, 3),
        )
        self.assertEqual(1, generate_random_multigraph(1, 1, 0.0, 0).n)
        for n, m, p in ((0, 0, 0.0), (4, 2, 0.0), (3, 3, -0.1)):
            with self.assertRaises(GeneratorError):
                generate_random_multigraph(n, m, p, 0)

    def test_petersen(self):
        g = petersen()
        self.assertEqual(10, g.n)
        self.assertEqual(PETERSEN_EDGES, g.m)
        self.assertTrue(g.is_cubic())
        self.assertEqual(list(range(5)), sorted(petersen(range(5)).negative_edges()))


class TestSweep(GraphTest):

    def test_signature_enumeration(self):
        self.assertEqual(
            [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)],
            list(signatures_up_to(3, 2)),
        )
        self.assertEqual(1 + 15 + 105, len(list(signatures_up_to(PETERSEN_EDGES, 2))))

    def test_sampling_is_seeded(self):
        first = list(sampled_signatures(PETERSEN_EDGES, 5, 11))
        self.assertEqual(5, len(first))
        self.assertEqual(first, list(sampled_signatures(PETERSEN_EDGES, 5, 11)))
        for negative in first:
            self.assertEqual(sorted(negative), list(negative))

    def test_rows(self):
        rows = run_sweep(petersen_all_positive(), signatures_up_to(PETERSEN_EDGES, 1))
        self.assertEqual(16, len(rows))
        self.assertEqual(list(range(16)), [row.index for row in rows])
        self.assertEqual("flowed", rows[0].outcome)
        self.assertTrue(rows[0].verified)
        # a single negative edge is never flow-admissible
        self.assertEqual({"inadmissible"}, {row.outcome for row in rows[1:]})
        self.assertFalse(any(row.failed for row in rows))

    def test_failures_reported(self):
        rows = run_sweep(k4(), signatures_up_to(6, 0))
        (row,) = rows
        self.assertEqual("precondition", row.outcome)
        self.assertTrue(row.failed)
        report = format_report(rows)
        self.assertIn("0 0 - yes no no precondition", report)
        self.assertTrue(report.endswith("total 1: flowed 0, inadmissible 0, precondition 1, breach 0\n"))

    def test_worker_settings(self):
        ctx.setup_limits({"brute_force_max_edges": 9})
        ctx.setup_engine({"check_invariants": False})
        ctx.setup_cache_from_config({"engine": "simple"})
        settings = worker_settings()
        self.assertEqual("simple", settings[2])
        try:
            ctx.setup_limits({})
            ctx.setup_engine({})
            ctx.setup_cache(NoCache())
            configure_worker(*settings)
            self.assertEqual(9, ctx.limits["brute_force_max_edges"])
            self.assertFalse(ctx.engine["check_invariants"])
            self.assertIsInstance(ctx.cache, SimpleCache)
            self.assertEqual(logging.CRITICAL, ctx.log.level)
        finally:
            ctx.setup_logging(level=logging.CRITICAL)
            ctx.setup_limits({})
            ctx.setup_engine({"check_invariants": True})

    def test_process_pool_keeps_order(self):
        signatures = list(signatures_up_to(6, 2))
        self.assertEqual(
            run_sweep(k4(), iter(signatures), jobs=1),
            run_sweep(k4(), iter(signatures), jobs=2),
        )


class TestMain(GraphTest):

    tmp: tempfile.TemporaryDirectory
    root: Path

    def setUp(self) -> None:
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)

    def tearDown(self) -> None:
        self.tmp.cleanup()
        ctx.setup_logging(level=logging.CRITICAL)
        ctx.setup_engine({"check_invariants": True})
        super().tearDown()

    def _write(self, name: str, text: str) -> Path:
        path = self.root / name
        path.write_text(text, encoding="ascii", newline="\n")
        return path

    def _run(self, *argv: str) -> Tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_exit_codes(self):
        self.assertEqual(2, exit_code_for(NotCubic("x")))
        self.assertEqual(10, exit_code_for(InvariantBreach("x")))
        self.assertEqual(1, exit_code_for(FormatError("x", 1)))
        self.assertEqual(1, exit_code_for(ReductionError("x")))

    def test_flow_and_verify(self):
        sgf = self._write("p.sgf", serialize_sgf(petersen_all_negative()))
        flw = self.root / "p.flw"
        code, out, _ = self._run("flow", str(sgf), "-o", str(flw))
        self.assertEqual(0, code)
        self.assertEqual("", out)
        self.assertTrue(flw.read_text(encoding="ascii").startswith("flw 1\n15\n"))

        code, out, _ = self._run("verify", str(sgf), str(flw))
        self.assertEqual(0, code)
        self.assertEqual("ok\n", out)

        graph = parse_sgf(sgf.read_text(encoding="ascii"))
        tau, values = parse_flw(flw.read_text(encoding="ascii")).to_flow(graph)
        tampered = list(values)
        tampered[0] = tampered[0] % 5 + 1
        bad = self._write("bad.flw", serialize_flw(tau, tampered))
        code, out, _ = self._run("verify", str(sgf), str(bad))
        self.assertEqual(1, code)
        self.assertEqual("fail\n", out)

    def test_flow_to_stdout(self):
        sgf = self._write("p.sgf", serialize_sgf(petersen_all_positive()))
        code, out, _ = self._run("--check-invariants", "flow", str(sgf))
        self.assertEqual(0, code)
        _, values = parse_flw(out).to_flow(petersen_all_positive())
        self.assertEqual(PETERSEN_EDGES, len(values))

    def test_flow_preconditions(self):
        sgf = self._write("k4.sgf", serialize_sgf(k4([0, 3])))
        code, out, err = self._run("flow", str(sgf))
        self.assertEqual(5, code)
        self.assertEqual("", out)
        self.assertTrue(err.startswith("error: "))

        sgf = self._write("loop.sgf", "sgf 1\n1 1\n0 0 -\n")
        code, _, _ = self._run("flow", str(sgf))
        self.assertEqual(2, code)

        sgf = self._write("broken.sgf", "sgf 1\n2 1\n0 5 -\n")
        code, _, err = self._run("flow", str(sgf))
        self.assertEqual(1, code)
        self.assertIn("line 3", err)

    def test_missing_file(self):
        code, _, err = self._run("check", str(self.root / "absent.sgf"))
        self.assertEqual(1, code)
        self.assertTrue(err.startswith("error: "))

    def test_check(self):
        sgf = self._write("k4.sgf", serialize_sgf(k4()))
        code, out, _ = self._run("check", str(sgf))
        self.assertEqual(0, code)
        self.assertEqual(
            "cubic: yes\n"
            "loops: no\n"
            "balanced components: 1\n"
            "flow-admissible: yes\n"
            "cyclic edge-connectivity: 3\n",
            out,
        )

        sgf = self._write("dumbbell.sgf", serialize_sgf(dumbbell()))
        _, out, _ = self._run("check", str(sgf))
        self.assertIn("loops: yes\n", out)
        self.assertIn("balanced components: 0\n", out)

    def test_reduce(self):
        sgf = self._write("loops.sgf", serialize_sgf(double_negative_loop()))
        target = self.root / "reduced.sgf"
        code, _, _ = self._run("reduce", str(sgf), "-o", str(target))
        self.assertEqual(0, code)
        reduced = parse_sgf(target.read_text(encoding="ascii"))
        self.assertTrue(reduced.is_cubic())
        self.assertTrue(is_flow_admissible(reduced))

        sidecar = self.root / "reduced.sgf.recipe.json"
        recipe = LiftRecipe.model_validate_json(sidecar.read_text(encoding="ascii"))
        self.assertEqual(1, len(recipe.steps))
        self.assertEqual(reduced, recipe.reduced_graph)

    def test_gen(self):
        code, out, _ = self._run("gen", "--n", "10", "--neg-prob", "0.5", "--seed", "3")
        self.assertEqual(0, code)
        self.assertEqual(serialize_sgf(generate_random_cubic_signed(10, 0.5, 3)), out)

        code, out, err = self._run("gen", "--n", "7")
        self.assertEqual(1, code)
        self.assertEqual("", out)
        self.assertIn("even", err)

    def test_sweep(self):
        sgf = self._write("p.sgf", serialize_sgf(petersen_all_positive()))
        code, out, _ = self._run("sweep", str(sgf), "--max-neg", "1")
        self.assertEqual(0, code)
        lines = out.splitlines()
        self.assertEqual(18, len(lines))
        self.assertEqual("total 16: flowed 1, inadmissible 15, precondition 0, breach 0", lines[-1])

        sgf = self._write("k4.sgf", serialize_sgf(k4()))
        code, _, _ = self._run("sweep", str(sgf), "--max-neg", "0")
        self.assertEqual(1, code)
