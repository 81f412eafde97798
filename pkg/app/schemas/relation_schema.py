from pydantic import BaseModel, Field


class RelationPredicates(BaseModel):
    reflexive: bool = Field(
        ...,
        title="Reflexive",
        description="Every pair (a, a) belongs to the relation",
        examples=[True]
    )
    symmetric: bool = Field(
        ...,
        title="Symmetric",
        description="The relation equals its opposite",
        examples=[False]
    )
    transitive: bool = Field(
        ...,
        title="Transitive",
        description="The relation contains its composite with itself",
        examples=[True]
    )
    compatible: bool = Field(
        ...,
        title="Compatible",
        description="The pair set is closed under every operation applied coordinatewise",
        examples=[True]
    )
