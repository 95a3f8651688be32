"""Exception hierarchy shared by every stage of the pipeline."""


class HeegaardError(Exception):
    """Base class; ``stage`` names the pipeline stage that raised it."""

    stage = "core"


class SingularMatrix(HeegaardError):
    stage = "linalg"


class NotQSphere(HeegaardError):
    """The intersection matrix is singular."""

    stage = "diagram"


class CrossingNotOnCurve(HeegaardError):
    stage = "diagram"


class InvalidMatching(HeegaardError):
    stage = "diagram"


class CapExceeded(HeegaardError):
    stage = "diagram"

    def __init__(self, cap, found):
        super().__init__(f"more than {cap} matchings (found {found} before stopping)")
        self.cap = cap
        self.found = found


class NotACycle(HeegaardError):
    stage = "invariants"


class ParseError(HeegaardError):
    stage = "parse"

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class DuplicateId(ParseError):
    pass


class UnknownReference(ParseError):
    pass


class LayoutError(HeegaardError):
    stage = "layout"


class InvalidLayout(LayoutError):
    def __init__(self, report):
        super().__init__("layout failed validation:\n" + report.format())
        self.report = report


class SignMismatch(LayoutError):
    pass


class DegenerateTangent(LayoutError):
    pass


class AntiparallelStep(LayoutError):
    pass


class NonHorizontalEnds(LayoutError):
    pass


class OddBetaDegree(LayoutError):
    pass


class MatchingMismatch(HeegaardError):
    stage = "invariants"
