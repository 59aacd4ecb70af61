import logging
from unittest import TestCase
from ..cache import TraceCache
from ..config import DEFAULT_ENGINE, DEFAULT_LIMITS
from ..context import ctx


class GraphTest(TestCase):
    """
    Base for tests that run library code: quiet logging, a TraceCache so that
    cached analyses can be asserted on, and the conversion invariant checks on.
    """

    cache: TraceCache

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        ctx.setup_logging(level=logging.CRITICAL)
        ctx.setup_engine({"check_invariants": True})

    @classmethod
    def tearDownClass(cls) -> None:
        ctx.setup_engine(dict(DEFAULT_ENGINE))
        ctx.setup_limits(dict(DEFAULT_LIMITS))
        super().tearDownClass()

    def setUp(self) -> None:
        self.cache = TraceCache()
        ctx.setup_cache(self.cache)
