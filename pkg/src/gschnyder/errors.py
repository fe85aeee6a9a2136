"""Exception taxonomy shared across the package.

Every domain failure raised by this library derives from GSchnyderError so
callers (and the CLI) can separate expected rejections from genuine bugs.
"""

from __future__ import annotations


class GSchnyderError(Exception):
    """Base class for all domain errors raised by this package."""


# ---------------------------------------------------------------- construction


class NonOrientable(GSchnyderError):
    """Some directed edge is used twice with the same orientation."""


class OpenSurface(GSchnyderError):
    """Some edge is incident to fewer or more than two face sides."""


class Disconnected(GSchnyderError):
    """The map (or a vertex id) is not connected to the rest."""


class CorruptMap(GSchnyderError):
    """Internal structural inconsistency (bad permutation, bad Euler data)."""


# ------------------------------------------------------------------ generators


class TooSmall(GSchnyderError):
    """Requested instance parameters are below the smallest valid size."""


class NoDisjointFaces(GSchnyderError):
    """No admissible pair of vertex-disjoint faces exists for a handle."""


# ------------------------------------------------------------------- traversal


class InternalStuck(GSchnyderError):
    """No update candidate exists although the region is incomplete (a bug)."""


class NotFree(GSchnyderError):
    """Conquest requested at a corner that is not a free boundary corner."""


class WrongKind(GSchnyderError):
    """Doubling requested for an edge of the wrong classification."""


# ------------------------------------------------------------------ validation


class MissingOut2(GSchnyderError):
    """An inner vertex has no outgoing edge of color 2."""


# ----------------------------------------------------------------------- codec


class NotTraversalWood(GSchnyderError):
    """Wood lacks the traversal provenance (or its order property fails)."""


class MalformedW(GSchnyderError):
    """The tree word is unbalanced or structurally unusable."""


class MalformedSpecial(GSchnyderError):
    """A doubled-edge record points at an impossible corner or rank."""


class UnmatchedColor1(GSchnyderError):
    """The color-1 parenthesis word cannot be matched."""


class NonTriangulable(GSchnyderError):
    """Face completion cannot triangulate a reconstructed face."""


class BadMagic(GSchnyderError):
    """Serialized stream does not start with the expected magic bytes."""


class TruncatedStream(GSchnyderError):
    """Serialized stream ends before all declared fields are read."""


class LengthMismatch(GSchnyderError):
    """Serialized stream has trailing bytes or inconsistent lengths."""
