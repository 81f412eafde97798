from typing import List, Optional
from pydantic import BaseModel, Field

from app.enums.verdict_enum import VerdictEnum


class Check(BaseModel):
    name: str = Field(
        ...,
        title="Check Name",
        description="Identifier printed after CHECK in machine mode",
        examples=["left-star-symmetric"]
    )
    verdict: VerdictEnum = Field(
        ...,
        title="Verdict",
        examples=[VerdictEnum.FAIL]
    )
    witness: Optional[str] = Field(
        None,
        title="Witness",
        description="Counterexample, found term, or certificate backing the verdict",
        examples=["(0,1)"]
    )
    details: List[str] = Field(
        [],
        title="Details",
        description="Explanatory lines shown in human mode only"
    )


class Report(BaseModel):
    title: str = Field(
        ...,
        title="Title",
        description="Header line of a human-mode report",
        examples=["audit of monoid01 in context pointed:0"]
    )
    listing: List[str] = Field(
        [],
        title="Listing",
        description="Result lines printed in both modes, before the checks",
        examples=[["CONGRUENCE {{0,2}, {1,3}}"]]
    )
    checks: List[Check] = Field(
        [],
        title="Checks"
    )
    notes: List[str] = Field(
        [],
        title="Notes",
        description="Trailing lines shown in human mode only",
        examples=[["scope: the variety generated by bool2"]]
    )

    @property
    def verdict(self) -> VerdictEnum:
        verdicts = {check.verdict for check in self.checks}
        if VerdictEnum.FAIL in verdicts:
            return VerdictEnum.FAIL
        if VerdictEnum.INCONCLUSIVE in verdicts:
            return VerdictEnum.INCONCLUSIVE
        return VerdictEnum.PASS
