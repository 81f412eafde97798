from pathlib import Path
from typing import List, Optional
from pydantic import BaseModel, Field, field_validator, model_validator

from app.config.settings import settings
from app.enums.command_enum import CommandEnum
from app.enums.output_mode_enum import OutputModeEnum
from app.enums.relation_property_enum import RelationPropertyEnum
from app.enums.term_kind_enum import TermKindEnum
from app.schemas.context_schema import IdealContext


class RunConfiguration(BaseModel):
    command: CommandEnum = Field(
        ...,
        title="Command",
        examples=[CommandEnum.AUDIT]
    )
    algebra: str = Field(
        ...,
        title="Algebra File",
        description="Path of the algebra description",
        examples=["corpus/bool4.alg"]
    )
    relation: Optional[str] = Field(
        None,
        title="Relation File",
        description="Path of the relation description, for check-relation",
        examples=["corpus/set3_chain.rel"]
    )
    context: Optional[str] = Field(
        None,
        title="Context",
        description="total, pointed:<index|constant> or proto",
        examples=["pointed:0"]
    )
    properties: List[RelationPropertyEnum] = Field(
        [],
        title="Properties",
        description="Relation properties to check; all when empty",
        examples=[[RelationPropertyEnum.LEFT_STAR_SYMMETRIC]]
    )
    kind: Optional[TermKindEnum] = Field(
        None,
        title="Term Kind",
        examples=[TermKindEnum.E_SUBTRACTIVE]
    )
    max_relations: int = Field(
        settings.max_relations,
        gt=0,
        title="Relation Budget",
        examples=[20000]
    )
    clone_budget: int = Field(
        settings.clone_budget,
        gt=0,
        title="Clone Budget",
        examples=[70000]
    )
    sigma_budget: int = Field(
        settings.sigma_budget,
        gt=0,
        title="Sigma Search Budget",
        examples=[100000]
    )
    output: OutputModeEnum = Field(
        OutputModeEnum.HUMAN,
        title="Output Mode",
        examples=[OutputModeEnum.MACHINE]
    )

    model_config = {
        "frozen": True
    }

    @field_validator("context")
    @classmethod
    def check_context(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            IdealContext.parse(value)
        return value

    @model_validator(mode="after")
    def check_inputs(self) -> "RunConfiguration":
        if not Path(self.algebra).is_file():
            raise ValueError(f"Algebra file '{self.algebra}' does not exist.")
        if self.command == CommandEnum.CHECK_RELATION:
            if self.relation is None:
                raise ValueError("check-relation needs a relation file.")
            if not Path(self.relation).is_file():
                raise ValueError(f"Relation file '{self.relation}' does not exist.")
        if self.command == CommandEnum.FIND_TERMS and self.kind is None:
            raise ValueError("find-terms needs a term kind.")
        return self

    def ideal_context(self, default: IdealContext) -> IdealContext:
        return IdealContext.parse(self.context) if self.context else default
