"""Ramseytype Error Types and Explanatory Error Messages.

This module provides the error handling infrastructure for ramseytype.
Every failure carries a stable code, a message, and a hint that says
what the caller can change to get past it.
"""

from dataclasses import dataclass
from typing import Any, Optional, Tuple


@dataclass
class SourceLocation:
    """Represents a position in a corpus input.

    Used by the codec to report which record of which source failed.
    """
    source: str
    line: int
    column: int = 0

    def __str__(self) -> str:
        if self.column:
            return f"{self.source}:{self.line}:{self.column}"
        return f"{self.source}:{self.line}"


class ErrorCode:
    """Error code constants organized by category."""

    # Graph construction errors (E001-E099)
    E001 = "E001"  # Edge endpoint out of range
    E002 = "E002"  # Self loop
    E003 = "E003"  # Vertex out of range
    E004 = "E004"  # Bad parameter

    # Codec errors (E101-E199)
    E101 = "E101"  # Bad graph6 header
    E102 = "E102"  # graph6 payload length mismatch
    E103 = "E103"  # Non-canonical padding bits
    E104 = "E104"  # Order not encodable
    E105 = "E105"  # Malformed edge-list block
    E106 = "E106"  # Unparseable graph name

    # Search limit errors (E201-E299)
    E201 = "E201"  # Order cap exceeded
    E202 = "E202"  # Node budget exhausted
    E203 = "E203"  # Graph disconnected
    E204 = "E204"  # Parts too small

    # Proof procedure errors (E301-E399)
    E301 = "E301"  # Lemma hypothesis violated
    E302 = "E302"  # Unknown theorem id
    E303 = "E303"  # Unknown check id
    E304 = "E304"  # Unknown Ramsey constant

    # Configuration and usage errors (E401-E499)
    E401 = "E401"  # Bad configuration file
    E402 = "E402"  # Usage error


@dataclass
class ErrorTemplate:
    """Template for generating explanatory error messages."""
    code: str
    message: str
    hint: str = ""


ERROR_TEMPLATES = {
    # Graph construction
    ErrorCode.E001: ErrorTemplate(
        code=ErrorCode.E001,
        message="Edge ({u}, {v}) has an endpoint outside 0..{last}.",
        hint="Vertices are the integers 0..order-1; raise the order or fix the edge list."
    ),
    ErrorCode.E002: ErrorTemplate(
        code=ErrorCode.E002,
        message="Edge ({v}, {v}) is a loop; only simple graphs are supported.",
        hint="Drop the pair or replace it with an edge between distinct vertices."
    ),
    ErrorCode.E003: ErrorTemplate(
        code=ErrorCode.E003,
        message="Vertex {vertex} is not in a graph of order {order}.",
        hint="Valid vertices are 0..{last}."
    ),
    ErrorCode.E004: ErrorTemplate(
        code=ErrorCode.E004,
        message="Bad parameter for {what}: {details}",
        hint="Check the allowed range in the command help."
    ),

    # Codec
    ErrorCode.E101: ErrorTemplate(
        code=ErrorCode.E101,
        message="Malformed graph6 header: {details}",
        hint="A graph6 record starts with chr(n+63) for n <= 62, or '~' plus three\n"
             "characters for larger orders. All characters lie in '?'..'~'."
    ),
    ErrorCode.E102: ErrorTemplate(
        code=ErrorCode.E102,
        message="graph6 payload has {found} character(s), expected {expected} for order {order}.",
        hint="The payload holds ceil(n(n-1)/2 / 6) characters; the record may be truncated."
    ),
    ErrorCode.E103: ErrorTemplate(
        code=ErrorCode.E103,
        message="graph6 padding bits are not zero.",
        hint="Re-encode the record, or pass --lenient to accept it with a warning."
    ),
    ErrorCode.E104: ErrorTemplate(
        code=ErrorCode.E104,
        message="Order {order} cannot be written as graph6.",
        hint="graph6 headers cover orders 0..258047."
    ),
    ErrorCode.E105: ErrorTemplate(
        code=ErrorCode.E105,
        message="Malformed edge-list block: {details}",
        hint="Each block is a line 'n m' followed by m lines 'u v'."
    ),
    ErrorCode.E106: ErrorTemplate(
        code=ErrorCode.E106,
        message="Cannot read graph name '{text}'.",
        hint="Examples: K5, P7, C5, E3, K2,4, K1,4*, K4*, CK3, T3, K3^3, K2+4K1,\n"
             "K1+4K2, K1+3P3, E2+K3, K3+E3, 3P3, 3K3, 3K1,3."
    ),

    # Search limits
    ErrorCode.E201: ErrorTemplate(
        code=ErrorCode.E201,
        message="{what} needs exact search on {order} vertices; the cap is {cap}.",
        hint="Raise the cap with --exact-cap, or run on a smaller graph."
    ),
    ErrorCode.E202: ErrorTemplate(
        code=ErrorCode.E202,
        message="{what} gave up after {budget} search nodes.",
        hint="The answer is unknown, not negative. Raise --node-budget to continue."
    ),
    ErrorCode.E203: ErrorTemplate(
        code=ErrorCode.E203,
        message="{what} needs a connected graph; this one has {components} components.",
        hint="Run on a single component, or use the non-connected variant."
    ),
    ErrorCode.E204: ErrorTemplate(
        code=ErrorCode.E204,
        message="Part {index} has {size} vertices, fewer than the target {target}.",
        hint="Every part must hold at least q vertices."
    ),

    # Proof procedures
    ErrorCode.E301: ErrorTemplate(
        code=ErrorCode.E301,
        message="Hypothesis '{hypothesis}' fails at {where}.",
        hint="The induced matching lemma needs every x in X to have a neighbour in Y,\n"
             "every y in Y at most n neighbours in X, and |X| >= n(p-1)+1."
    ),
    ErrorCode.E302: ErrorTemplate(
        code=ErrorCode.E302,
        message="Unknown theorem id '{theorem_id}'.",
        hint="Known ids: {available}"
    ),
    ErrorCode.E303: ErrorTemplate(
        code=ErrorCode.E303,
        message="Unknown check id '{check_id}'.",
        hint="Known checks: {available}"
    ),
    ErrorCode.E304: ErrorTemplate(
        code=ErrorCode.E304,
        message="Ramsey constant R_{colors}({order}) is not known.",
        hint="Supply it through --ramsey-table; it will be reported as external."
    ),

    # Configuration and usage
    ErrorCode.E401: ErrorTemplate(
        code=ErrorCode.E401,
        message="Cannot read configuration '{path}': {details}",
        hint="The Ramsey table is JSON: {{\"values\": [{{\"colors\": 2, \"order\": 4, \"value\": 18}}]}}"
    ),
    ErrorCode.E402: ErrorTemplate(
        code=ErrorCode.E402,
        message="{details}",
        hint="Run with --help for the command grammar."
    ),
}


@dataclass
class RamseyTypeError(Exception):
    """Base error type for all ramseytype errors.

    Provides formatting with optional source position and hint.
    """
    code: str
    message: str
    source: Optional[str] = None
    line: Optional[int] = None
    column: Optional[int] = None
    hint: str = ""

    def __str__(self) -> str:
        return self.format()

    def __reduce__(self) -> Tuple[Any, ...]:
        return (
            self.__class__,
            (self.code, self.message, self.source, self.line, self.column, self.hint),
        )

    def format(self) -> str:
        """Format the error for display."""
        output = []

        if self.source and self.line:
            location = f"{self.source} at line {self.line}"
            if self.column:
                location += f", column {self.column}"
            output.append(f"Error {self.code} in {location}:")
        else:
            output.append(f"Error {self.code}:")

        output.append(self.message)

        if self.hint:
            output.append(f"Hint: {self.hint}")

        return "\n".join(output)

    @property
    def location(self) -> Optional[SourceLocation]:
        if self.source is None or self.line is None:
            return None
        return SourceLocation(self.source, self.line, self.column or 0)


class GraphError(RamseyTypeError):
    """Error while building or indexing a graph."""
    pass


class CodecError(RamseyTypeError):
    """Error while decoding or encoding corpus text."""
    pass


class SearchLimitError(RamseyTypeError):
    """An exact search hit a cap or budget, or its input was out of scope."""
    pass


class ProofStepError(RamseyTypeError):
    """A proof procedure was called outside its hypotheses."""
    pass


class ConfigError(RamseyTypeError):
    """Error in configuration or command usage."""
    pass


_CATEGORY = {
    "E0": GraphError,
    "E1": CodecError,
    "E2": SearchLimitError,
    "E3": ProofStepError,
    "E4": ConfigError,
}


def make_error(
    code: str,
    location: Optional[SourceLocation] = None,
    **kwargs: Any
) -> RamseyTypeError:
    """Create an error using the template system.

    Args:
        code: Error code (e.g., ErrorCode.E201)
        location: Optional corpus position
        **kwargs: Values to substitute into message and hint templates

    Returns:
        An instance of the subclass matching the code's category
    """
    cls = _CATEGORY.get(code[:2], RamseyTypeError)
    template = ERROR_TEMPLATES.get(code)
    if not template:
        return cls(
            code=code,
            message=f"Unknown error {code}",
            source=location.source if location else None,
            line=location.line if location else None,
            column=location.column if location else None,
        )

    try:
        message = template.message.format(**kwargs)
    except KeyError:
        message = template.message

    try:
        hint = template.hint.format(**kwargs)
    except KeyError:
        hint = template.hint

    return cls(
        code=code,
        message=message,
        source=location.source if location else None,
        line=location.line if location else None,
        column=location.column if location else None,
        hint=hint,
    )


def order_cap_error(what: str, order: int, cap: int) -> RamseyTypeError:
    """Create an order-cap error for an exact solver."""
    return make_error(ErrorCode.E201, what=what, order=order, cap=cap)


def budget_error(what: str, budget: int) -> RamseyTypeError:
    """Create a node-budget error; distinct from a negative answer."""
    return make_error(ErrorCode.E202, what=what, budget=budget)


def bad_parameter_error(what: str, details: str) -> RamseyTypeError:
    """Create a bad-parameter error."""
    return make_error(ErrorCode.E004, what=what, details=details)


def unknown_theorem_error(theorem_id: str, available: str) -> RamseyTypeError:
    """Create an unknown-theorem error listing the known ids."""
    return make_error(ErrorCode.E302, theorem_id=theorem_id, available=available)
