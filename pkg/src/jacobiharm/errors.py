"""Typed errors raised across the package.

All errors derive from JacobiharmError so callers (notably the CLI) can
catch malformed input uniformly and report it instead of crashing.
"""


class JacobiharmError(Exception):
    """Base class for all package errors."""


class ParityMismatch(JacobiharmError):
    """j2, m2, q2 do not share the same parity."""


class RangeViolation(JacobiharmError):
    """Index outside the admissible lattice range (j2 < |m2| or j2 < |q2|),
    or classic parameters outside n >= 0, alpha, beta >= -n, alpha+beta >= -n."""


class InvalidParams(JacobiharmError):
    """Jacobi polynomial parameters outside the supported integer lattice."""


class InvalidTriple(JacobiharmError):
    """An operation received something that is not a valid index triple."""


class DomainError(JacobiharmError):
    """Evaluation point outside the operation's domain (|x| > 1, angles out
    of the sector range, or a derivative requested at a singular endpoint)."""


class InvalidShift(JacobiharmError):
    """A ladder coefficient was nonzero on a shift leaving the lattice.

    Indicates a coefficient-formula bug; the closed forms vanish exactly on
    every edge, so this must be unreachable.
    """


class LabelMismatch(JacobiharmError):
    """Coefficient vectors with incompatible (m2, q2) labels or bases."""


class SectorMismatch(JacobiharmError):
    """Harmonic state or triple does not belong to the requested sector."""


class UnknownKind(JacobiharmError):
    """Unrecognized seminorm inequality kind."""
