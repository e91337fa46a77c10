"""Exception types shared across the package."""


class LoopError(Exception):
    """Base class for every error raised by osbornkit."""


class Malformed(LoopError):
    """A ``.loop`` text could not be tokenized or has the wrong shape."""


class NotLatin(LoopError):
    """A Cayley table repeats an entry in some row or column."""

    def __init__(self, message, cell=None, axis=None):
        super().__init__(message)
        self.cell = cell
        self.axis = axis


class NoIdentity(LoopError):
    """A Latin square without a two-sided identity element."""


class IdentitySyntaxError(LoopError):
    """Parse failure in the identity DSL; ``pos`` is a 0-based offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class OrderMismatch(LoopError):
    pass


class BoundExceeded(LoopError):
    """A search was requested on a loop larger than the configured cap."""

    def __init__(self, what, n, bound):
        super().__init__(f"{what}: order {n} exceeds bound {bound} (override with --bound)")
        self.n = n
        self.bound = bound


class HypothesisFailed(LoopError):
    """A theorem checker was run on a loop that does not meet its hypothesis."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Gamma23Mismatch(LoopError):
    """The right- and left-translation forms of gamma_23 differ as permutations."""

    def __init__(self, params, witness):
        super().__init__(f"gamma23 forms disagree at p={params}, element {witness}")
        self.params = params
        self.witness = witness


class NotAGroup(LoopError):
    pass


class BadFilter(LoopError):
    pass


class UnknownVertex(LoopError):
    pass
