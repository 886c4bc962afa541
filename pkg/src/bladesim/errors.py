"""Shared exception types."""


class BladesimError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatchError(BladesimError):
    """Operands act on different numbers of qubits."""


class CapacityError(BladesimError):
    """Qubit count exceeds what a dense backend is allowed to handle."""


class DegenerateStateError(BladesimError):
    """A generator annihilates the vacuum, so no state or projector exists."""


class NotInIdealError(BladesimError):
    """A multivector lies outside the state space beyond tolerance."""


class TableauInvariantError(BladesimError):
    """A stabilizer tableau failed a structural self-check."""
