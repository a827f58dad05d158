"""Shared decision record for the set-level deciders."""

from __future__ import annotations

from dataclasses import dataclass, field

from .signatures import Transform

YES = "yes"
NO = "no"
UNDECIDED = "undecided"
CAP_EXCEEDED = "cap_exceeded"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"


@dataclass
class Decision:
    """Outcome of a transformability decision.

    On a yes, `witness` is the transformation T with every signature in T
    times the target class (the binary equality condition holds by the
    orthogonal/diagonal shape of T), and `branch` names the class variant.
    """

    outcome: str
    branch: str | None = None
    witness: Transform | None = None
    candidates_tested: int = 0
    blockers: list[str] = field(default_factory=list)

    @property
    def is_yes(self) -> bool:
        return self.outcome == YES
