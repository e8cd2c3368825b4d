"""Exception types shared across the library.

The CLI maps these onto its exit-code contract: input problems exit 2,
numerical failures exit 3, and violated mathematical hypotheses exit 4.
"""


class JspecError(Exception):
    """Base class for all library-specific errors."""


class AlgebraMismatchError(JspecError):
    """Operands carry different algebra descriptors."""


class InvalidFrameError(JspecError):
    """A claimed Jordan frame violates idempotency, orthogonality, or completeness."""


class UnsupportedAlgebraError(JspecError):
    """The operation is not defined for this algebra kind (e.g. needs a simple algebra)."""


class NumericError(JspecError):
    """A numerical kernel failed to converge.  Never swallowed silently."""


class NotInIdentityComponentError(JspecError):
    """The automorphism lies outside the identity component, so no path to it exists."""


class OrbitMismatchError(JspecError):
    """Endpoints do not share (factor-wise) eigenvalues, so no orbit path exists."""


class MembershipError(JspecError):
    """A required set-membership hypothesis does not hold."""


class InfeasiblePathError(JspecError):
    """No connectivity witness can be constructed; `clause` names the failed hypothesis."""

    def __init__(self, message: str, clause: str):
        super().__init__(message)
        self.clause = clause
