# -*- coding: utf-8 -*-

"""Errors raised by nashvop."""


class NashVopError(Exception):
    """Base class for every error raised by this package."""


class UnboundedInput(NashVopError):
    """A polyhedron expected to be bounded has a ray or a lineality space."""


class DimensionMismatch(NashVopError, ValueError):
    """Operands live in spaces of different dimension."""


class EmptyInput(NashVopError, ValueError):
    """An operation that needs a nonempty set received an empty one."""


class EmptySet(NashVopError):
    """A requested feasible set is empty."""


class EmptyIntersection(EmptySet):
    """The intersection of the player constraint sets is empty."""


class EmptyDomain(NashVopError):
    """A parametric problem was asked to cover an empty parameter domain."""


class InfeasibleCandidate(NashVopError, ValueError):
    """The candidate handed to an efficiency test is not feasible."""


class InfeasiblePoint(NashVopError, ValueError):
    """A point to be checked for equilibrium is not jointly feasible."""


class EmptyGrid(NashVopError, ValueError):
    """A grid specification produces no usable points."""


class UnknownVariable(NashVopError, ValueError):
    """A cost expression references a player or coordinate that does not exist."""


class GameFileError(NashVopError, ValueError):
    """A game file is malformed or inconsistent."""


class CostSyntaxError(SyntaxError):
    """A cost expression could not be parsed.

    :param  message: What went wrong.
    :param  offset: Zero-based character offset at which parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__('{} at offset {}'.format(message, offset))
        self.reason = message
        self.offset = offset


class UnsupportedGame(NashVopError, ValueError):
    """The operation does not apply to this kind of game."""
