"""Exceptions shared across the package and mapped to CLI exit codes."""


class GhwlabError(Exception):
    pass


class BudgetExceeded(GhwlabError):
    """Enumeration refused: the subspace count is over the configured budget."""

    def __init__(self, count: int, budget: int, detail: str = ""):
        self.count = count
        self.budget = budget
        msg = f"enumeration of {count} subspaces exceeds budget {budget}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class HypothesesNotMet(GhwlabError):
    """The closed-form engine refused to run; lists the failing hypotheses."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("closed form unavailable: " + "; ".join(self.failures))
