class CutServiceError(Exception):
    """General error of CutService."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Error in CutService. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cut computation failed. Details: {self.error_details}"


class SearchBudgetExceededError(Exception):
    """The exact search hit its node budget before proving optimality."""
    exit_code = 3

    def __init__(self, budget: int, error_details: str = "branch-and-bound"):
        self.budget = budget
        self.error_details = error_details
        super().__init__(self.budget, self.error_details)

    def __str__(self) -> str:
        return f"Search budget exceeded ({self.error_details}). Budget: {self.budget} nodes."

    @property
    def detail(self) -> str:
        return (
            f"The exact solver explored {self.budget} nodes without finishing. "
            "Raise the search budget or shrink the instance."
        )
