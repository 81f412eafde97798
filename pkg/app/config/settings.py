import os
from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class Settings(BaseModel):
    max_congruence_size: int = Field(
        8,
        gt=0,
        title="Congruence Size Budget",
        description="Largest carrier for which all congruences are enumerated"
    )
    max_power_size: int = Field(
        4096,
        gt=0,
        title="Power Size Budget",
        description="Largest carrier a direct power may have"
    )
    max_relations: int = Field(
        20000,
        gt=0,
        title="Relation Budget",
        description="Maximum number of relations produced by one enumeration"
    )
    clone_budget: int = Field(
        70000,
        gt=0,
        title="Clone Budget",
        description="Maximum number of term operations in one clone"
    )
    max_table_size: int = Field(
        1_000_000,
        gt=0,
        title="Table Size Budget",
        description="Largest operation table materialized for a power or a free model"
    )
    sigma_budget: int = Field(
        100_000,
        gt=0,
        title="Sigma Search Budget",
        description="Maximum number of search nodes when looking for a graph symmetry"
    )
    log_level: str = Field(
        "WARNING",
        title="Log Level",
        description="Level passed to logging.basicConfig"
    )


def load_settings() -> Settings:
    values = {
        "max_congruence_size": os.getenv("STAR_MAX_CONGRUENCE_SIZE"),
        "max_power_size": os.getenv("STAR_MAX_POWER_SIZE"),
        "max_relations": os.getenv("STAR_MAX_RELATIONS"),
        "clone_budget": os.getenv("STAR_CLONE_BUDGET"),
        "max_table_size": os.getenv("STAR_MAX_TABLE_SIZE"),
        "sigma_budget": os.getenv("STAR_SIGMA_BUDGET"),
        "log_level": os.getenv("STAR_LOG_LEVEL"),
    }
    return Settings(**{key: value for key, value in values.items() if value is not None})


settings = load_settings()
