from typing import Dict, List, Optional, Tuple
from pydantic import BaseModel, Field, model_validator

from app.enums.verdict_enum import VerdictEnum

Pair = Tuple[int, int]


class SymmetryVerdict(BaseModel):
    holds: bool = Field(
        ...,
        title="Holds",
        description="Whether the relation is (left) star-symmetric",
        examples=[False]
    )
    witness: Optional[Pair] = Field(
        None,
        title="Witness",
        description="A pair (a, b) of the relation with a trivial whose reverse is missing",
        examples=[(0, 1)]
    )

    @model_validator(mode="after")
    def check_witness(self) -> "SymmetryVerdict":
        if self.holds == (self.witness is not None):
            raise ValueError("A witness is present exactly when the property fails.")
        return self


class PermutabilityVerdict(BaseModel):
    holds: bool = Field(
        ...,
        title="Holds",
        description="Whether R composed after the star of S equals S composed after the star of R",
        examples=[True]
    )
    witness: Optional[Pair] = Field(
        None,
        title="Witness",
        description="A pair in exactly one of the two composites",
        examples=[(0, 2)]
    )
    first_composite: List[Pair] = Field(
        [],
        title="First Composite",
        description="Pairs of the star of S followed by R",
        examples=[[(0, 0), (0, 1), (0, 2)]]
    )
    second_composite: List[Pair] = Field(
        [],
        title="Second Composite",
        description="Pairs of the star of R followed by S",
        examples=[[(0, 0), (0, 1), (0, 2)]]
    )


class GraphSymmetryVerdict(BaseModel):
    verdict: VerdictEnum = Field(
        ...,
        title="Verdict",
        description="PASS when a symmetry map was found, FAIL when none exists, INCONCLUSIVE on budget exhaustion",
        examples=[VerdictEnum.PASS]
    )
    sigma: Optional[Dict[int, int]] = Field(
        None,
        title="Sigma",
        description="The symmetry map from the N-kernel of the first leg to that of the second",
        examples=[{0: 0, 1: 2}]
    )
    witness: Optional[int] = Field(
        None,
        title="Witness",
        description="An element of the first N-kernel without any admissible image",
        examples=[1]
    )
    nodes: int = Field(
        0,
        title="Search Nodes",
        description="Number of search nodes visited",
        examples=[3]
    )


class IdentityVerdict(BaseModel):
    holds: bool = Field(
        ...,
        title="Holds",
        description="Whether every identity holds under every assignment",
        examples=[False]
    )
    identity: Optional[str] = Field(
        None,
        title="Failing Identity",
        description="The first identity that fails",
        examples=["s(x,0)=x"]
    )
    assignment: Optional[Dict[str, int]] = Field(
        None,
        title="Failing Assignment",
        description="The first variable assignment, in lexicographic order, at which it fails",
        examples=[{"x": 1}]
    )
