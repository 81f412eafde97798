from typing import Optional


class WorkbenchError(Exception):
    """Base class of every error raised by the workbench services."""


class AlgebraSyntaxError(WorkbenchError):
    def __init__(self, message: str, line: int, column: int, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        location = f"{source}:" if source else ""
        super().__init__(f"{location}{line}:{column}: {message}")


class AlgebraValidationError(WorkbenchError):
    pass


class HomomorphismError(WorkbenchError):
    pass


class ContextError(WorkbenchError):
    pass


class RelationError(WorkbenchError):
    pass


class IdentitySyntaxError(WorkbenchError):
    pass


class BudgetExceededError(WorkbenchError):
    def __init__(self, message: str, budget: int):
        self.budget = budget
        super().__init__(message)
