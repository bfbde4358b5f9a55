class UnknownVertexError(Exception):
    """Vertex is not part of the graph."""
    exit_code = 2

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(self.vertex)

    def __str__(self) -> str:
        return f"Unknown vertex. Vertex id: {self.vertex}."

    @property
    def detail(self) -> str:
        return f"Vertex {self.vertex} does not belong to the graph."


class UnknownEdgeError(Exception):
    """Edge id is not part of the graph."""
    exit_code = 2

    def __init__(self, edge_id: int):
        self.edge_id = edge_id
        super().__init__(self.edge_id)

    def __str__(self) -> str:
        return f"Unknown edge. Edge id: {self.edge_id}."

    @property
    def detail(self) -> str:
        return f"Edge {self.edge_id} does not belong to the graph."


class LoopError(Exception):
    """An operation would create a loop, or a loop was declared."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Loop rejected. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Graphs are loopless: {self.error_details}"


class GraphOperationError(Exception):
    """Invalid arguments for a graph operation (identify, lift, multiplicity)."""
    exit_code = 2

    def __init__(self, operation: str, error_details: str):
        self.operation = operation
        self.error_details = error_details
        super().__init__(self.operation, self.error_details)

    def __str__(self) -> str:
        return f"Graph operation '{self.operation}' failed. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot apply '{self.operation}': {self.error_details}"


class GraphFormatError(Exception):
    """Graph file does not follow the `n m` + edge-lines format."""
    exit_code = 2

    def __init__(self, error_details: str, line_number: int | None = None):
        self.error_details = error_details
        self.line_number = line_number
        super().__init__(self.error_details, self.line_number)

    def __str__(self) -> str:
        return f"Graph format error at line {self.line_number}. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        if self.line_number is None:
            return f"Malformed graph file: {self.error_details}"
        return f"Malformed graph file (line {self.line_number}): {self.error_details}"


class IsomorphismBudgetError(Exception):
    """Graph is too large for the small isomorphism check."""
    exit_code = 3

    def __init__(self, vertex_count: int, limit: int):
        self.vertex_count = vertex_count
        self.limit = limit
        super().__init__(self.vertex_count, self.limit)

    def __str__(self) -> str:
        return f"Isomorphism budget exceeded. Vertices: {self.vertex_count}, limit: {self.limit}."

    @property
    def detail(self) -> str:
        return (
            f"Isomorphism check supports at most {self.limit} vertices, "
            f"got {self.vertex_count}."
        )
