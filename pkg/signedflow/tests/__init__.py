from .test_analysis import TestBalance, TestCyclicConnectivity, TestCycleSpace, TestMatching, TestBruteForce
from .test_cli import TestSgf, TestFlw, TestGenerators, TestSweep, TestMain
from .test_convert import TestVerify, TestConversionEngine, TestPipeline
from .test_core import TestSignedGraph, TestBoundary, TestReversalAndSwitching, TestVertexRole, TestContraction
from .test_plumbing import TestContext, TestCaches, TestErrors
from .test_reduce import TestSuppression, TestUncontraction, TestReduceToCubic, TestLift
from .test_z6 import TestIsomorphism, TestZ2Z3Search, TestNormalize
