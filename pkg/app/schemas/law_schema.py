from typing import List, Optional
from pydantic import BaseModel, Field

from app.enums.verdict_enum import VerdictEnum


class LawResult(BaseModel):
    name: str = Field(
        ...,
        title="Law",
        description="Short name of the relation-calculus law",
        examples=["star-of-composite"]
    )
    verdict: VerdictEnum = Field(
        ...,
        title="Verdict",
        examples=[VerdictEnum.PASS]
    )
    examined: int = Field(
        0,
        ge=0,
        title="Instances",
        description="Number of instances (relations, pairs of relations, or map and relation) checked",
        examples=[262144]
    )
    truncated: bool = Field(
        False,
        title="Truncated",
        description="Whether an enumeration feeding the law stopped at its budget",
        examples=[False]
    )
    witness: Optional[str] = Field(
        None,
        title="Witness",
        description="The first instance on which the law fails",
        examples=["R={(0,1)} S={(1,1)}"]
    )


class LawReport(BaseModel):
    algebra: str = Field(
        ...,
        title="Algebra",
        examples=["set3"]
    )
    context: str = Field(
        ...,
        title="Context",
        examples=["pointed:0"]
    )
    relations: int = Field(
        0,
        ge=0,
        title="Relations",
        description="Number of compatible relations enumerated",
        examples=[512]
    )
    morphisms: int = Field(
        0,
        ge=0,
        title="Endomorphisms",
        description="Number of endomorphisms enumerated (base preserving in a pointed context)",
        examples=[27]
    )
    laws: List[LawResult] = Field(
        ...,
        title="Laws"
    )

    @property
    def verdict(self) -> VerdictEnum:
        verdicts = {law.verdict for law in self.laws}
        if VerdictEnum.FAIL in verdicts:
            return VerdictEnum.FAIL
        if VerdictEnum.INCONCLUSIVE in verdicts:
            return VerdictEnum.INCONCLUSIVE
        return VerdictEnum.PASS
