"""Exception types shared across the engine."""


class PlanRankError(ValueError):
    """Base class for all engine rejections."""


class DomainError(PlanRankError):
    """An input is outside the operating domain of an operation."""


class ValidationError(PlanRankError):
    """A value violates a structural invariant."""


class ParameterError(PlanRankError):
    """A method parameter block is inconsistent."""


class ConvergenceError(PlanRankError):
    """An iterative numerical routine failed to converge."""


class DatasetError(PlanRankError):
    """A dataset file failed schema validation.

    ``pointer`` is a JSON-pointer-style path to the offending field.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{message} (at {pointer or '/'})")
        self.pointer = pointer
