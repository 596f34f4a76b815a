"""Exception hierarchy shared by the whole toolkit.

The CLI maps these onto exit codes: infeasibility is an expected answer
(exit 1), malformed input is a usage error (exit 2), and a contract
violation means an internal guarantee was contradicted (exit 3).
"""

from __future__ import annotations


class PhcError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(PhcError, ValueError):
    """Malformed edge-list document.

    ``kind`` distinguishes the diagnostics: ``bad-header``, ``malformed``,
    ``bad-vertex``, ``self-loop``, ``duplicate-edge``.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class PreconditionError(PhcError, ValueError):
    """An operation was called outside its documented preconditions."""


class InfeasibleError(PhcError):
    """The requested object provably does not exist.

    ``reason`` is a short machine-readable tag; ``witness`` optionally
    carries the vertex/edge/map that certifies infeasibility.
    """

    def __init__(self, reason: str, message: str | None = None, witness=None):
        super().__init__(message or reason)
        self.reason = reason
        self.witness = witness


class BudgetExceededError(PhcError):
    """An exhaustive search ran past its state budget; no answer is implied."""


class CertificationError(PhcError):
    """No all-round / bipartite-all-round certificate was found for an edge."""

    def __init__(self, edge_id: int, message: str | None = None):
        super().__init__(message or f"no certificate found for edge {edge_id}")
        self.edge_id = edge_id


class ContractViolationError(PhcError):
    """A guarantee the constructions rely on was contradicted.

    This is an alarm, not an infeasible instance: either the code is
    wrong or the guarantee itself fails for the input. The CLI reports
    it with exit status 3 so CI can tell bugs from honest 'no' answers.
    """
