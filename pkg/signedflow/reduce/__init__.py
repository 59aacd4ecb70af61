from .recipe import LiftRecipe, SuppressStep, UncontractStep, DropLoopStep, SwitchStep, Step
from .reduction import Workbench, suppress_degree_two, uncontract_vertex, reduce_to_cubic
from .lift import lift_flow
