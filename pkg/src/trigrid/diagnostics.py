"""Shared error codes, exceptions and warning plumbing.

Every failure a public operation can raise maps to exactly one DiagnosticCode.
Soft conditions (the "check your mesh" family) are reported as MeshWarning via
the standard warnings machinery instead of aborting the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class DiagnosticCode(Enum):
    INPUT_TOO_SMALL = "InputTooSmall"
    NODE_BUDGET_EXCEEDED = "NodeBudgetExceeded"
    SEGMENT_OVERFLOW = "SegmentOverflow"
    BAD_COUNTS = "BadCounts"
    CAPACITY_EXCEEDED = "CapacityExceeded"
    EDGE_CROSSING_DETECTED = "EdgeCrossingDetected"
    CROSS_STACK_OVERFLOW = "CrossStackOverflow"
    NEAR_LIST_OVERFLOW = "NearListOverflow"
    CHECK_MESH_WARNING = "CheckMeshWarning"
    NO_FREE_NODES = "NoFreeNodes"
    PARSE_ERROR = "ParseError"
    ORIENTATION_ERROR = "OrientationError"
    DEGENERATE_TRIANGLE = "DegenerateTriangle"
    DEGENERATE_SEGMENT = "DegenerateSegment"
    EMPTY_INPUT = "EmptyInput"
    ALL_COLLINEAR = "AllCollinear"
    STALLED = "Stalled"
    NON_CONVERGENCE = "NonConvergence"
    EULER_VIOLATION = "EulerViolation"
    INVALID_PARAMS = "InvalidParams"

    def __str__(self) -> str:
        return self.value


class MeshError(Exception):
    """Hard failure carrying a DiagnosticCode."""

    def __init__(self, code: DiagnosticCode, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class ParseError(MeshError):
    """Input text rejected; line is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(DiagnosticCode.PARSE_ERROR, message + where)


class OrientationError(MeshError):
    def __init__(self, message: str):
        super().__init__(DiagnosticCode.ORIENTATION_ERROR, message)


class ParamError(MeshError):
    """Bad user-facing parameter (usage error, not a meshing failure)."""

    def __init__(self, message: str):
        super().__init__(DiagnosticCode.INVALID_PARAMS, message)


class MeshWarning(UserWarning):
    """Soft condition: the run continues but the user should inspect the mesh."""

    def __init__(self, message: str,
                 code: DiagnosticCode = DiagnosticCode.CHECK_MESH_WARNING):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


@dataclass(frozen=True)
class Diagnostic:
    """A collected warning, as surfaced by the pipeline and the HTTP service."""

    code: DiagnosticCode
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"
