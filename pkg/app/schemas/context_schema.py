from typing import Optional
from pydantic import BaseModel, Field, model_validator

from app.enums.context_kind_enum import ContextKindEnum
from app.utils.exceptions import ContextError


class IdealContext(BaseModel):
    kind: ContextKindEnum = Field(
        ...,
        title="Context Kind",
        description="Which morphisms are null: all of them, those through a base point, or those through the constants",
        examples=[ContextKindEnum.PROTO]
    )
    base: Optional[str] = Field(
        None,
        title="Base Point",
        description="Element index or constant name selecting the base point of a pointed context",
        examples=["0", "zero"]
    )

    model_config = {
        "frozen": True
    }

    @model_validator(mode="after")
    def check_base(self) -> "IdealContext":
        if self.kind == ContextKindEnum.POINTED and not self.base:
            raise ValueError("A pointed context needs a base point.")
        if self.kind != ContextKindEnum.POINTED and self.base is not None:
            raise ValueError("Only a pointed context takes a base point.")
        return self

    @classmethod
    def total(cls) -> "IdealContext":
        return cls(kind=ContextKindEnum.TOTAL)

    @classmethod
    def pointed(cls, base) -> "IdealContext":
        return cls(kind=ContextKindEnum.POINTED, base=str(base))

    @classmethod
    def proto(cls) -> "IdealContext":
        return cls(kind=ContextKindEnum.PROTO)

    @classmethod
    def parse(cls, specifier: str) -> "IdealContext":
        """Read `total`, `pointed:<index|constant>` or `proto`."""
        text = specifier.strip()
        if text == ContextKindEnum.TOTAL.value:
            return cls.total()
        if text == ContextKindEnum.PROTO.value:
            return cls.proto()
        prefix = ContextKindEnum.POINTED.value + ":"
        if text.startswith(prefix) and len(text) > len(prefix):
            return cls.pointed(text[len(prefix):])
        raise ContextError(f"Malformed context specifier '{specifier}'.")

    def __str__(self) -> str:
        if self.kind == ContextKindEnum.POINTED:
            return f"{self.kind.value}:{self.base}"
        return self.kind.value
