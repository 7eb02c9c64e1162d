"""Exception types shared across the package.

Every domain error derives from LiecError so callers (and the CLI) can
catch one base class and map it to an exit code.
"""


class LiecError(Exception):
    """Base class for all domain errors raised by this package."""


# ---- graph construction / parsing ----

class MalformedLine(LiecError):
    """An edge-list line is not two nonnegative integers."""


class LoopEdge(LiecError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(LiecError):
    """The same edge appears twice in the input."""


class UnknownVertex(LiecError):
    """A vertex id is not part of the graph."""


class DisconnectedInput(LiecError):
    """An operation requires a connected graph with at least one edge."""


# ---- structural preconditions ----

class NotATree(LiecError):
    pass


class NotACactus(LiecError):
    pass


class NotCactusVdc(LiecError):
    """Cactus whose cycles are not vertex disjoint, or not a cactus at all."""


class FewerThanTwoCycles(LiecError):
    pass


class NotUnicyclic(LiecError):
    pass


class WrongClass(LiecError):
    """Graph class outside the operation's scope."""


class NotASpidey(LiecError):
    pass


class NotAShortLeg(LiecError):
    pass


# ---- colorings ----

class PartialColoring(LiecError):
    """A coloring does not cover every edge of the graph under inspection."""


class OverlappingEdges(LiecError):
    """Colorings being combined share an edge."""


# ---- recognizers / solvers ----

class TooLarge(LiecError):
    """Instance exceeds a documented size bound."""


class BudgetExceeded(LiecError):
    """Solver search budget exceeded; distinct from a definitive 'no'."""


class NotColorable(LiecError):
    """The graph admits no locally irregular edge coloring at all."""


class InTPrime(LiecError):
    """The graph belongs to the recursive family of non-colorable graphs."""


class PreconditionViolated(LiecError):
    """A documented operation precondition does not hold."""


class InvalidSpec(LiecError):
    """A generator specification is malformed."""


class ConstructionError(LiecError):
    """Internal invariant of a constructive procedure failed.

    Raised when a coloring produced by a construction step does not verify,
    or when a branch that the theory rules out is reached.  Always a bug or
    an invalid input slipping past validation; never a normal outcome.
    """
