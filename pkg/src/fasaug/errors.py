"""Exception types raised across the package."""


class FasAugError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(FasAugError, ValueError):
    pass


class InvalidInputError(FasAugError, ValueError):
    pass


class UndefinedRateError(FasAugError, ValueError):
    """An error rate whose denominator is zero.

    ``missing_class`` names the class with no samples (``"attack"`` or ``"live"``).
    """

    def __init__(self, missing_class: str):
        self.missing_class = missing_class
        super().__init__(f"rate undefined: no {missing_class} samples")


class ParseError(FasAugError, ValueError):
    """Malformed manifest or prediction file; carries the 1-based line number."""

    def __init__(self, path, line: int, message: str):
        self.path = str(path)
        self.line = line
        super().__init__(f"{self.path}:{line}: {message}")


class ContractViolation(FasAugError, ValueError):
    pass


class SampleIOError(FasAugError, OSError):
    def __init__(self, sample_id: str, message: str):
        self.sample_id = sample_id
        super().__init__(f"sample {sample_id!r}: {message}")


class JobError(FasAugError, RuntimeError):
    """Raised after a batch job finishes with one or more failed samples."""

    def __init__(self, failures):
        self.failures = list(failures)
        lines = "\n".join(f"  {sid}: {err}" for sid, err in self.failures)
        super().__init__(f"{len(self.failures)} sample(s) failed:\n{lines}")
