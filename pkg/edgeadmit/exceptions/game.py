class StrategyError(Exception):
    """A strategy cannot be built from the given certificate."""
    exit_code = 1

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Strategy construction failed. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot build a strategy: {self.error_details}"


class GameSetupError(Exception):
    """Invalid playout parameters."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Invalid game setup. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot play: {self.error_details}"
