from .problem import SatProblem, VarId
from .backend import SolveOutcome, SolverBackendError, solve

__all__ = ["SatProblem", "VarId", "SolveOutcome", "SolverBackendError", "solve"]
