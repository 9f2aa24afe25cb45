"""Exception hierarchy shared by all modules.

Errors are split along the CLI exit-code boundaries: input/shape problems,
mathematical check failures (which carry a witness whenever possible), and
budget exhaustion.  ``InexactDivision`` and ``NonIntegralCoefficient`` are
internal tripwires; if one of them ever fires the library has a bug.
"""


class DieudonneError(Exception):
    """Base class for all library errors."""


class InputError(DieudonneError):
    """Malformed or inconsistent input (CLI exit code 2)."""


class CheckFailure(DieudonneError):
    """A mathematical verification failed; carries a witness (exit code 1)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetError(DieudonneError):
    """A configured work budget was exceeded (exit code 3)."""


# -- finite ring construction ----------------------------------------------

class NonPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class CharacteristicViolation(InputError):
    pass


class NotAField(InputError):
    pass


class NotLocalRing(InputError):
    pass


# -- Witt / Zink arithmetic --------------------------------------------------

class InexactDivision(DieudonneError):
    """Internal bug sentinel: a division that must be exact was not."""


class BudgetExceeded(BudgetError):
    pass


class PrecisionMismatch(InputError):
    pass


class RingMismatch(InputError):
    pass


class BaseMismatch(InputError):
    pass


class SupportOverflow(InputError):
    """The finite-support part of a Zink-ring element outgrew its budget."""


# -- displays ----------------------------------------------------------------

class NotInvertible(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotInQ(InputError):
    pass


class NotLocalHom(InputError):
    pass


class NotSplit(CheckFailure):
    """Internal consistency failure of the etale/nilpotent splitting."""


# -- point functors ------------------------------------------------------------

class NotEtale(InputError):
    pass


class NotVNilpotent(InputError):
    pass


class EnumerationBudgetExceeded(BudgetError):
    pass


class Unstable(CheckFailure):
    """A truncation parameter was too small to certify the result."""


# -- Cartier / pairing ---------------------------------------------------------

class NonIntegralCoefficient(DieudonneError):
    """Internal tripwire: an Artin-Hasse coefficient had a denominator
    divisible by p."""


class ValidationFailed(CheckFailure):
    pass


class PrecisionInsufficient(InputError):
    pass
