from typing import List
from pydantic import BaseModel, Field

from app.enums.term_kind_enum import TermKindEnum
from app.enums.verdict_enum import VerdictEnum


class FoundTerm(BaseModel):
    label: str = Field(
        ...,
        title="Label",
        description="Which term was sought: s_<e> for an E-subtractive term, p for a Mal'tsev term",
        examples=["s_0"]
    )
    term: str = Field(
        ...,
        title="Term",
        description="The witnessing term in prefix form",
        examples=["and(x, not(y))"]
    )
    table: List[int] = Field(
        ...,
        title="Table",
        description="Values on all argument tuples in lexicographic order",
        examples=[[0, 0, 1, 0]]
    )


class TermSearchCertificate(BaseModel):
    kind: TermKindEnum = Field(
        ...,
        title="Kind",
        examples=[TermKindEnum.E_SUBTRACTIVE]
    )
    algebra: str = Field(
        ...,
        title="Algebra",
        description="Name of the algebra generating the variety",
        examples=["bool2"]
    )
    verdict: VerdictEnum = Field(
        ...,
        title="Verdict",
        description="PASS when every term was found, FAIL when the complete clone lacks one, INCONCLUSIVE otherwise",
        examples=[VerdictEnum.PASS]
    )
    clone_size: int = Field(
        ...,
        ge=0,
        title="Clone Size",
        description="Number of term operations generated",
        examples=[16]
    )
    complete: bool = Field(
        ...,
        title="Complete",
        description="Whether the clone was closed under every operation",
        examples=[True]
    )
    found: List[FoundTerm] = Field(
        [],
        title="Found Terms"
    )
    missing: List[str] = Field(
        [],
        title="Missing Terms",
        description="Labels of the terms that were not found",
        examples=[["s_0"]]
    )
