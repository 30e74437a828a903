"""Linear ODEs with entire coefficients: ray integration, bases, Wronskians, reduction."""
from .compile import CompileError, compile_coefficients
from .integrate import (IntegrationError, LinearODE, RayTrace, SolutionHandle, fan_angles,
                        integrate_ray, solution_basis, solution_log_M)
from .reduction import (ReducedODE, ReductionError, reduce_order, reduction_residual)
from .wronskian import (DegenerateWronskian, abel_discrepancy, reconstruct_coefficient,
                        wronskian_at)
from .zerobound import RootFindingError, find_roots, polynomial_zero_bound, verify_roots_within

__all__ = [
    "CompileError", "compile_coefficients", "IntegrationError", "LinearODE", "RayTrace",
    "SolutionHandle", "fan_angles", "integrate_ray", "solution_basis", "solution_log_M",
    "ReducedODE", "ReductionError", "reduce_order", "reduction_residual",
    "DegenerateWronskian", "abel_discrepancy", "reconstruct_coefficient", "wronskian_at",
    "RootFindingError", "find_roots", "polynomial_zero_bound", "verify_roots_within",
]
