class PartitionError(Exception):
    """Tree-partition is malformed (not a tree, bags overlap or miss vertices)."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Invalid tree-partition. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"The tree-partition is not valid: {self.error_details}"


class EdgeSumError(Exception):
    """Edge-sum arguments do not satisfy the degree / bijection conditions."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Edge-sum rejected. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot build the edge-sum: {self.error_details}"


class DecompositionError(Exception):
    """Refinement did not converge or broke one of its invariants."""
    exit_code = 3

    def __init__(self, error_details: str, steps: int):
        self.error_details = error_details
        self.steps = steps
        super().__init__(self.error_details, self.steps)

    def __str__(self) -> str:
        return f"Decomposition failed after {self.steps} steps. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return (
            f"The refinement stopped after {self.steps} steps: {self.error_details}. "
            "Please report the input graph."
        )


class RecomposeError(Exception):
    """Torsos cannot be glued back (edge provenance is inconsistent)."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Recomposition failed. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot glue the torsos back together: {self.error_details}"
