"""Exception types shared across the package."""


class OrdAlgError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateNameError(OrdAlgError):
    """An element name occurs more than once."""


class UnknownNameError(OrdAlgError):
    """A cover pair or lookup references an undeclared element."""


class CycleDetectedError(OrdAlgError):
    """The reflexive-transitive closure of the covers is not antisymmetric."""

    def __init__(self, first: str, second: str):
        self.pair = (first, second)
        super().__init__(f"cover cycle through {first!r} and {second!r}")


class NoTopError(OrdAlgError):
    """The operation requires a greatest element and the poset has none."""


class PartialStarError(OrdAlgError):
    """A total sectional-pseudocomplement table is required but some cell is undefined."""


class BudgetError(OrdAlgError):
    """A size or work budget was exceeded."""


class SizeBudgetError(BudgetError):
    """Carrier larger than the configured element budget."""


class SubsetBudgetError(BudgetError):
    """Exhaustive powerset checking requested beyond the subset budget."""


class MissingConstantError(OrdAlgError):
    """The algebra lacks a constant that the check needs."""


class NotVerifiedError(OrdAlgError):
    """A consequence suite was invoked without a passing axiom report for its subject."""


class PreconditionError(OrdAlgError):
    """A stated hypothesis of the check fails on this input."""

    def __init__(self, hypothesis: str, witness: tuple = ()):
        self.hypothesis = hypothesis
        self.witness = witness
        msg = f"hypothesis {hypothesis!r} fails"
        if witness:
            msg += f" at {witness}"
        super().__init__(msg)


class UnknownFixtureError(OrdAlgError):
    """No built-in structure with the requested name."""


class ParseError(OrdAlgError):
    """Structure file is malformed; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownElementError(ParseError):
    """A table header, cover, or constant references an undeclared element."""


class RaggedTableError(ParseError):
    """An operation table row has the wrong number of cells."""
