from edgeadmit.schemas.structure import ImmersionWitness


class ThetaImmersionError(Exception):
    """The graph contains theta_{k+1} as an immersion, so the carving bound does not apply."""
    exit_code = 1

    def __init__(self, witness: ImmersionWitness):
        self.witness = witness
        super().__init__(self.witness)

    def __str__(self) -> str:
        return (
            f"Graph contains theta_{len(self.witness.paths)} between "
            f"{self.witness.source} and {self.witness.target}."
        )

    @property
    def detail(self) -> str:
        return (
            f"Vertices {self.witness.source} and {self.witness.target} are joined by "
            f"{len(self.witness.paths)} edge-disjoint paths."
        )


class CarvingError(Exception):
    """Invalid carving input or violated carving precondition."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Carving error. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Carving decomposition failed: {self.error_details}"
