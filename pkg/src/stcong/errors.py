"""Exception hierarchy. Each class names the violated contract."""

from __future__ import annotations


class StcongError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParams(StcongError):
    """Malformed construction parameters (weights, ids, family specs)."""


# -- spanning tree validation ------------------------------------------------

class WrongEdgeCount(StcongError):
    """Edge set does not have exactly |V| - 1 edges."""


class ContainsCycle(StcongError):
    """Edge set contains a cycle."""


class NotSpanning(StcongError):
    """Acyclic edge set of the right size that fails to reach every vertex."""


class SameVertex(StcongError):
    """Path query with identical endpoints."""


class Disconnected(StcongError):
    """Operation requires a connected graph."""


# -- congestion ----------------------------------------------------------------

class TreeGraphMismatch(StcongError):
    """Spanning tree does not belong to the given graph."""


class EmptyVector(StcongError):
    """Norm of an empty value sequence."""


class RemoveNotOnCycle(StcongError):
    """Swap removal edge is not on the inserted edge's tree cycle."""


class InsertAlreadyInTree(StcongError):
    """Swap insertion edge is already a tree edge."""


# -- planar --------------------------------------------------------------------

class EdgesCross(StcongError):
    """Two edge segments intersect away from a shared endpoint."""

    def __init__(self, e1: int, e2: int):
        super().__init__(f"edges {e1} and {e2} cross")
        self.e1 = e1
        self.e2 = e2


class MissingCoordinates(StcongError):
    """Planar operation on a graph without vertex coordinates."""


class NotSpanningDual(StcongError):
    """Dual complement of a spanning tree failed to span the dual graph."""


class NotCactus(StcongError):
    """Graph has an edge lying on two distinct cycles."""


class NotPlanar(StcongError):
    """Planar-only algorithm invoked on a graph without an embedding."""


# -- dual-growth algorithms ------------------------------------------------------

class NoBoundaryEdges(StcongError):
    """Relative congestion of a tree with no computable edges."""


class EmptyCandidates(StcongError):
    """Edge selection from an empty candidate set."""


# -- bounds ----------------------------------------------------------------------

class ExactModeOnWeighted(StcongError):
    """Exact edge-disjoint path count requested on a weighted graph."""


class TooLarge(StcongError):
    """Instance exceeds the hard cap of an exponential scan."""


# -- oracle ------------------------------------------------------------------------

class CapExceeded(StcongError):
    """Spanning tree enumeration would exceed the configured cap."""

    def __init__(self, expected_count: int, cap: int):
        super().__init__(f"graph has {expected_count} spanning trees, cap is {cap}")
        self.expected_count = expected_count
        self.cap = cap


# -- families ------------------------------------------------------------------------

class DisconnectedSample(StcongError):
    """Random graph sampling kept producing disconnected graphs."""


class ZeroWeight(StcongError):
    """Label weighting produced a non-positive edge weight."""


class KindFamilyMismatch(StcongError):
    """Named spanning tree kind undefined for the given family."""


class NoFormula(StcongError):
    """No closed formula for the requested family, norm and weighting."""
