class FileRepositoryError(Exception):
    """Input or output file cannot be read or written."""
    exit_code = 2

    def __init__(self, path: str, error_details: str):
        self.path = path
        self.error_details = error_details
        super().__init__(self.path, self.error_details)

    def __str__(self) -> str:
        return f"Error in FileRepository. Path: {self.path}. Details: {self.error_details}"

    @property
    def detail(self) -> str:
        return f"Cannot access '{self.path}': {self.error_details}"
