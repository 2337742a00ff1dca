class ResourceBoundError(RuntimeError):
    """A computation was refused because it exceeds a configured size bound."""
