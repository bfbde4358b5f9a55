class LayoutError(Exception):
    """Layout is not a permutation of the vertex set."""
    exit_code = 2

    def __init__(self, error_details: str):
        self.error_details = error_details
        super().__init__(self.error_details)

    def __str__(self) -> str:
        return f"Invalid layout. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"The layout must list every vertex exactly once: {self.error_details}"


class CertificateError(Exception):
    """Certificate does not verify against the graph."""
    exit_code = 1

    def __init__(self, certificate: str, error_details: str):
        self.certificate = certificate
        self.error_details = error_details
        super().__init__(self.certificate, self.error_details)

    def __str__(self) -> str:
        return f"Certificate '{self.certificate}' rejected. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"The {self.certificate} certificate is not valid: {self.error_details}"


class CertificateFormatError(Exception):
    """Certificate file cannot be parsed."""
    exit_code = 2

    def __init__(self, error_details: str, line_number: int | None = None):
        self.error_details = error_details
        self.line_number = line_number
        super().__init__(self.error_details, self.line_number)

    def __str__(self) -> str:
        return f"Certificate format error at line {self.line_number}. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Malformed certificate file: {self.error_details}"
