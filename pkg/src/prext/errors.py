class ResourceLimitError(RuntimeError):
    """A size guard or search budget was exceeded.

    Raised instead of running an exponential search past its configured
    limit; the CLI maps it to exit code 3.
    """
