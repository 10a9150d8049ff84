class PreconditionError(ValueError):
    """A valid game was passed to a computation whose mathematical precondition fails."""


class SchemaError(ValueError):
    """An input document does not match the game or GAI file format."""
