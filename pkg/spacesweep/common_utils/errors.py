class UsageError(Exception):
    """
    Bad input or parameters, the command line exits with 2
    """


class NotFound(Exception):
    ...


class VerificationMismatch(Exception):
    ...
