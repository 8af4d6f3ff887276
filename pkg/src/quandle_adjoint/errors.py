"""Exception types shared across the package."""


class QuandleAdjointError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteGroup(QuandleAdjointError):
    """A cyclic summand order was <= 0; only finite groups are supported."""


class DimensionMismatch(QuandleAdjointError):
    """Vector or matrix shapes do not line up."""


class IllDefinedHom(QuandleAdjointError):
    """A matrix does not define an endomorphism of the presented group.

    ``row`` and ``col`` are the 1-based position of the first entry
    violating t[i][j] * d_j == 0 (mod d_i).
    """

    def __init__(self, row, col, message=None):
        self.row = row
        self.col = col
        super().__init__(message or f"entry ({row},{col}) breaks the order condition")


class NotInvertible(QuandleAdjointError):
    """The endomorphism is not an automorphism but one was required."""


class CapExceeded(QuandleAdjointError):
    """A configured element-count cap was exceeded."""


class NotConnected(QuandleAdjointError):
    """The quandle is not connected but a connected one was required."""


class InfiniteQuotient(QuandleAdjointError):
    """A cokernel turned out infinite; with positive ambient orders this
    indicates a bug upstream."""


class InvalidInputSpec(QuandleAdjointError):
    """A structured input document is malformed or semantically invalid."""
