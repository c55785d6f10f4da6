"""Shared exception types."""


class CodeParseError(ValueError):
    """Raised when a code description (text or JSON) cannot be parsed."""


class BudgetExceededError(RuntimeError):
    """A search or enumeration hit its configured budget.

    Distinct from "no certificate found": the search did not finish.
    The ``context`` attribute carries partial-progress details.
    """

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = dict(context or {})


class NotFullDimensionalError(ValueError):
    """A nonempty body has empty interior, so interior-taking is refused.

    ``body_index`` is the 0-based position of the offending body.
    """

    def __init__(self, body_index: int):
        super().__init__(f"body {body_index} is nonempty but not full-dimensional")
        self.body_index = body_index
