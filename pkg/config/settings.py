from typing import Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Application Settings
    app_name: str = "semiproper"
    app_version: str = "1.0.0"
    debug: bool = Field(default=False)

    # Logging Settings (diagnostics only, never part of any output file)
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)

    model_config = SettingsConfigDict(
        env_prefix="SEMIPROPER_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


class SearchDefaults(BaseModel):
    model_config = ConfigDict(frozen=True)

    budget_seconds: float = 60.0
    budget_nodes: Optional[int] = None

    # Size guards for the exhaustive solvers
    brute_max_edges_two: int = 16
    brute_max_edges_three: int = 12
    proper_max_edges: int = 20
    audit_max_vertices: int = 10
    audit_max_edges: int = 16

    labeling_partial_flow: bool = True
    peel_max_states: int = 200_000


class GeneratorDefaults(BaseModel):
    model_config = ConfigDict(frozen=True)

    prng: str = "numpy.PCG64"
    seed: int = 0
    cactus_blocks: int = 20
    cactus_max_cycle: int = 9
    cactus_edge_probability: float = 0.4
    outerplanar_vertices: int = 30
    tree_vertices: int = 8


class Defaults(BaseModel):
    model_config = ConfigDict(frozen=True)

    search: SearchDefaults = SearchDefaults()
    generators: GeneratorDefaults = GeneratorDefaults()
    report_schema: str = "semiproper.report/1"


settings = Settings()
defaults = Defaults()
