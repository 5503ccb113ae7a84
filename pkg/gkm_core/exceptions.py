import typing


class GKMError(Exception):
    def __init__(self, message: str):
        self.message = message

    def __str__(self):
        return repr(self.message)


class GKMVariableCountError(GKMError):
    pass


class GKMConfigError(GKMError):
    pass


class GKMParseError(GKMError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.detail = message
        super().__init__(f"line {line}, column {column}: {message}")


class GKMValidationError(GKMError):
    def __init__(
        self,
        check: str,
        offending: typing.Sequence[str],
        location: tuple[int, int] | None = None,
    ):
        self.check = check
        self.offending = list(offending)
        self.location = location
        message = f"check '{check}' failed on {', '.join(self.offending) or '(graph)'}"
        if location:
            message = f"line {location[0]}, column {location[1]}: {message}"
        super().__init__(message)


class GKMOrientationError(GKMError):
    pass


class GKMUnknownVertexError(GKMError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"unknown vertex '{vertex}'")


class GKMClassError(GKMError):
    pass


class GKMClassFileError(GKMClassError):
    """A class file that does not fit its graph (schema, degree or values), as
    opposed to a class that fails the edge relations."""

    pass


class GKMDegreeError(GKMError):
    pass


class GKMInfeasibleError(GKMError):
    def __init__(self, message: str, vertex: str | None = None):
        self.vertex = vertex
        super().__init__(message)


class GKMNonUniqueError(GKMError):
    pass


class GKMCLIError(GKMError):
    pass
