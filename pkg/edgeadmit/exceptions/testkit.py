class OracleBudgetError(Exception):
    """Instance is too large for a brute-force oracle."""
    exit_code = 3

    def __init__(self, oracle: str, size: int, limit: int):
        self.oracle = oracle
        self.size = size
        self.limit = limit
        super().__init__(self.oracle, self.size, self.limit)

    def __str__(self) -> str:
        return f"Oracle '{self.oracle}' budget exceeded. Size: {self.size}, limit: {self.limit}."

    @property
    def detail(self) -> str:
        return f"The {self.oracle} oracle handles at most {self.limit}, got {self.size}."


class CorpusSpecError(Exception):
    """Corpus spec text or bounds are invalid."""
    exit_code = 2

    def __init__(self, spec: str, error_details: str):
        self.spec = spec
        self.error_details = error_details
        super().__init__(self.spec, self.error_details)

    def __str__(self) -> str:
        return f"Invalid corpus spec '{self.spec}'. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Corpus spec '{self.spec}' is invalid: {self.error_details}"


class GadgetError(Exception):
    """Invalid terminals or parameters for the hardness gadget."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Gadget construction failed. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot build the gadget: {self.error_details}"
