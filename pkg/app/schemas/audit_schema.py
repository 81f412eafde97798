from typing import List, Optional, Tuple
from pydantic import BaseModel, Field

from app.enums.verdict_enum import VerdictEnum

Pair = Tuple[int, int]


class Counterexample(BaseModel):
    relation: List[Pair] = Field(
        ...,
        title="Relation",
        description="Pair set of the relation on which the check failed",
        examples=[[(0, 0), (0, 1), (1, 1)]]
    )
    other: Optional[List[Pair]] = Field(
        None,
        title="Second Relation",
        description="Second relation of a failing permutability check",
        examples=[None]
    )
    witness: Pair = Field(
        ...,
        title="Witness",
        description="The failing pair",
        examples=[(0, 1)]
    )


class ConditionResult(BaseModel):
    condition: int = Field(
        ...,
        ge=1,
        le=4,
        title="Condition",
        description="Number of the characterization of 2-star-permutability being audited",
        examples=[3]
    )
    name: str = Field(
        ...,
        title="Name",
        description="Short name used in report lines",
        examples=["reflexive-left-star-symmetric"]
    )
    verdict: VerdictEnum = Field(
        ...,
        title="Verdict",
        examples=[VerdictEnum.FAIL]
    )
    examined: int = Field(
        0,
        ge=0,
        title="Examined",
        description="Number of relations or relation pairs checked",
        examples=[4]
    )
    truncated: bool = Field(
        False,
        title="Truncated",
        description="Whether the underlying enumeration stopped at its budget",
        examples=[False]
    )
    counterexamples: List[Counterexample] = Field(
        [],
        title="Counterexamples",
        description="All failing relations with their witnesses, in canonical relation order"
    )
    note: Optional[str] = Field(
        None,
        title="Note",
        examples=["compatible equivalence relations coincide with congruences in a variety"]
    )


class AuditReport(BaseModel):
    algebra: str = Field(
        ...,
        title="Algebra",
        description="Name of the audited algebra",
        examples=["monoid01"]
    )
    context: str = Field(
        ...,
        title="Context",
        description="Context specifier",
        examples=["pointed:0"]
    )
    conditions: List[ConditionResult] = Field(
        ...,
        title="Conditions",
        description="One result per condition, in order"
    )
    relations_examined: int = Field(
        0,
        ge=0,
        title="Relations Examined",
        description="Number of reflexive compatible relations enumerated",
        examples=[4]
    )
    truncated: bool = Field(
        False,
        title="Truncated",
        description="Whether any enumeration stopped at its budget",
        examples=[False]
    )
    scope: str = Field(
        ...,
        title="Scope",
        description="Which conclusion the verdicts support",
        examples=["a FAIL refutes the variety generated by monoid01"]
    )

    @property
    def verdict(self) -> VerdictEnum:
        verdicts = {condition.verdict for condition in self.conditions}
        if VerdictEnum.FAIL in verdicts:
            return VerdictEnum.FAIL
        if VerdictEnum.INCONCLUSIVE in verdicts:
            return VerdictEnum.INCONCLUSIVE
        return VerdictEnum.PASS
