"""
Exception hierarchy shared by the library and the command line.

Every error carries a short ``code`` that the CLI reports as the ``error``
field of its JSON envelope.
"""


class WonderfulError(Exception):
    """Base class for every domain error raised by the toolkit."""
    code = "domain_error"

    def __init__(self, message: str, detail: str | None = None):
        super().__init__(message)
        self.detail = detail if detail is not None else message


class UnsupportedRootSystem(WonderfulError):
    """Raised for root-system tags outside A_n, B2, G2."""
    code = "unsupported_root_system"


class WeylEnumerationUnavailable(WonderfulError):
    """Raised when an operation needs W but the rank is past the enumeration gate."""
    code = "weyl_enumeration_unavailable"


class InvalidPrime(WonderfulError):
    """Raised for non-primes, primes dividing the Coxeter number, or primes below a table's range."""
    code = "invalid_prime"


class NotDominant(WonderfulError):
    code = "not_dominant"


class NotRestricted(WonderfulError):
    """Custom exception for weights outside the p-restricted box."""
    code = "not_restricted"


class ConjecturalForType(WonderfulError):
    """Raised when a statement is only proven in type A."""
    code = "conjectural_for_type"


class ExpansionTooLarge(WonderfulError):
    code = "expansion_too_large"


class NotInvertible(WonderfulError):
    """Raised when a graded element with zero degree-0 part must be inverted."""
    code = "not_invertible"


class StateLimitExceeded(WonderfulError):
    """Raised when the subdivisor DP holds more states than WF_DP_STATE_LIMIT allows."""
    code = "state_limit_exceeded"


class TheoremViolation(WonderfulError):
    """Raised when computed data contradicts a proven uniqueness or existence statement."""
    code = "theorem_violation"


class WeightParseError(WonderfulError):
    code = "weight_parse_error"


class ConfigurationError(WonderfulError):
    code = "configuration_error"
