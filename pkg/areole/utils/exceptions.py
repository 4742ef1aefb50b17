from typing import Optional, Tuple
from pydantic import ValidationError as ValError


class AreoleError(Exception):
    """Base class for all analysis errors."""
    code = "E_INTERNAL"
    exit_status = 1

    def __init__(self, message, mitigation=None, location=None):
        super().__init__(message)
        self.mitigation = mitigation
        self.location: Optional[Tuple[int, int]] = location

    @property
    def message(self) -> str:
        return self.args[0]

    def __str__(self):
        return f"{self.args[0]} | Mitigation: {self.mitigation}"


class MathError(AreoleError):
    """Error raised by the exact integer and rational kernels."""


class DimensionMismatchError(MathError):
    """Operands of incompatible shapes."""
    code = "E_DIM"

    def __init__(self, message="Matrix dimensions do not conform."):
        super().__init__(
            message, "Check the shapes of the operands.")


class UnderdeterminedSystemError(MathError):
    """Consistent linear system whose matrix has a nontrivial kernel."""
    code = "E_UNDERDETERMINED"

    def __init__(self, rank, unknowns):
        super().__init__(
            f"System is underdetermined: rank {rank} < {unknowns} unknowns.",
            "Add independent equations or fix the free unknowns.")
        self.rank = rank
        self.unknowns = unknowns


class DegenerateFormError(MathError):
    """The symbolic 2x2 echelon formula divides by gcd(a, b) = 0."""
    code = "E_DEGENERATE"

    def __init__(self, message="gcd(a, b) vanishes: a = b = 0."):
        super().__init__(
            message, "Use the numeric row echelon form for this matrix.")


class EchelonStepLimitError(MathError):
    """The row echelon loop exceeded its elementary-step budget."""
    code = "E_ECHELON_STEPS"

    def __init__(self, limit):
        super().__init__(
            f"Row echelon form did not finish within {limit} steps.",
            "Raise AREOLE_ECHELON_STEP_LIMIT or use --strategy footprint-box.")
        self.limit = limit


class BudgetExceededError(AreoleError):
    """An exhaustive enumeration would exceed the configured budget."""
    code = "E_BUDGET"

    def __init__(self, what, estimate, budget):
        super().__init__(
            f"Refusing to enumerate {what}: about {estimate} points "
            f"exceeds the budget of {budget}.",
            "Shrink the domain, bind smaller parameter values or raise "
            "AREOLE_ENUMERATION_BUDGET.")
        self.estimate = estimate
        self.budget = budget


class FrontEndError(AreoleError):
    """
    Errors in the loop-nest source or its analysis.

    A source that does not parse is a rejected program, not a usage error:
    every front-end error exits with status 1.
    """
    exit_status = 1



class DSLSyntaxError(FrontEndError):
    """Source text does not follow the loop-nest grammar."""
    code = "E_SYNTAX"

    def __init__(self, message, line, col):
        super().__init__(
            message, "See docs/grammar.ebnf for the accepted syntax.",
            (line, col))


class UnknownIdentifierError(FrontEndError):
    """Identifier is neither a counter in scope, a parameter nor a scalar."""
    code = "E_UNKNOWN_ID"

    def __init__(self, name, location=None):
        super().__init__(
            f"Unknown identifier '{name}'.",
            "Declare parameters with 'param NAME;' and only use loop "
            "counters inside their loop.", location)
        self.name = name


class RepetitionPragmaError(FrontEndError):
    """The @repetition annotation does not describe the loop nest."""
    code = "E_PRAGMA"

    def __init__(self, message, location=None):
        super().__init__(
            message,
            "Name existing loops, outermost first, nested in that order.",
            location)


class UndeclaredArrayError(FrontEndError):
    """Subscripted identifier missing from the function header."""
    code = "E_UNDECLARED"

    def __init__(self, name, location=None):
        super().__init__(
            f"Access to undeclared array '{name}'.",
            "Declare the array in the function header, e.g. "
            f"'{name}[][] : in'.", location)
        self.name = name


class UnsupportedConstructError(FrontEndError):
    """Construct outside the polytope model (e.g. indirection)."""
    code = "E_UNSUPPORTED"

    def __init__(self, message, location=None):
        super().__init__(
            message, "Rewrite the access with affine subscripts.", location)


class AffinityViolation(FrontEndError):
    """Subscript function is not affine in the loop counters."""
    code = "E_NONAFFINE"

    def __init__(self, subscript, reason, location=None):
        super().__init__(
            f"Subscript '{subscript}' is not affine: {reason}.",
            "Only integer-linear combinations of loop counters and "
            "parameters can be mapped to a paving.", location)
        self.subscript = subscript


class NonSquareRepetitionError(FrontEndError):
    """Repetition loop bounds depend on another loop counter."""
    code = "E_NONSQUARE"

    def __init__(self, counter, location=None):
        super().__init__(
            f"Repetition loop '{counter}' is not square: its bounds "
            "depend on a loop counter.",
            "Repetition bounds must be constants or parameters.", location)
        self.counter = counter


class RepetitionDependentDomainError(FrontEndError):
    """Inner loop bounds change with the repetition counters."""
    code = "E_RDOMAIN"

    def __init__(self, counter, location=None):
        super().__init__(
            f"Bounds of inner loop '{counter}' depend on a repetition "
            "counter.",
            "Make the inner iteration domain independent of the "
            "repetition loops.", location)
        self.counter = counter


class GeometryError(AreoleError):
    """Errors while handling iteration domains and footprints."""


class UnboundedDomainError(GeometryError):
    """Vertices of an iteration domain cannot be computed."""
    code = "E_UNBOUNDED"

    def __init__(self, message="Iteration domain is unbounded.",
                 location=None):
        super().__init__(
            message,
            "Supply a bounding box with --user-box ARRAY#K=lo..hi,...",
            location)


class EmptyDomainError(GeometryError):
    """Iteration domain contains no point."""
    code = "E_EMPTY"

    def __init__(self, message="Iteration domain is empty."):
        super().__init__(message, "Check the loop bounds and parameters.")


class SynthesisError(AreoleError):
    """Errors while building channels."""


class ParametricLimitationError(SynthesisError):
    """Symbolic entries where numbers are required."""
    code = "E_PARAMETRIC"

    def __init__(self, message):
        super().__init__(
            message,
            "Bind the parameters with --param NAME=VALUE; only 1x1 and 2x2 "
            "matrices have a symbolic echelon form, and --user-box can "
            "replace uncomputable vertices.")


class StrategyError(SynthesisError):
    """The requested pattern strategy does not apply to the channel."""
    code = "E_STRATEGY"

    def __init__(self, message):
        super().__init__(
            message, "Use --strategy general or footprint-box.")


class OutputOverlapError(SynthesisError):
    """Footprints of an output channel overlap between repetitions."""
    code = "E_OVERLAP_OUT"

    def __init__(self, channel, first, second, cell):
        super().__init__(
            f"Output channel {channel} overlaps: repetitions {first} and "
            f"{second} both write cell {cell}.",
            "Overlapping writes may make the result non-deterministic; "
            "change the paving or drop --strict.")
        self.channel = channel


class SpecFormatError(AreoleError):
    """Error for handling pydantic validation errors of a spec document."""
    code = "E_SPEC_FORMAT"
    exit_status = 2

    def __init__(self, validation_error: ValError):
        error_messages = self.format_errors(validation_error)
        super().__init__(
            "Spec document validation error occurred.",
            "Ensure the document was produced by this version of areole."
        )
        self.validation_error = validation_error
        self.error_details = error_messages

    @staticmethod
    def format_errors(validation_error):
        """Formats the validation error details."""
        error_messages = []
        for error in validation_error.errors():
            loc = ".".join(map(str, error['loc']))
            msg = error['msg']
            error_messages.append(f"Field: {loc} | Issue: {msg}")
        return error_messages

    def __str__(self):
        """String representation with all error details."""
        formatted_errors = "\n".join(self.error_details)
        return f"{super().__str__()}\nDetails:\n{formatted_errors}"


class UsageError(AreoleError):
    """Invalid command-line usage."""
    code = "E_USAGE"
    exit_status = 2

    def __init__(self, message):
        super().__init__(message, "Run 'areole --help'.")


class InputFileError(AreoleError):
    """Input file missing or unreadable, or output not writable."""
    code = "E_IO"
    exit_status = 2

    def __init__(self, path, reason):
        super().__init__(
            f"Cannot access '{path}': {reason}.",
            "Check the path and its permissions.")
        self.path = path
