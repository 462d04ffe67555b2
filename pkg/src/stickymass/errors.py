class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed its configured size budget."""
