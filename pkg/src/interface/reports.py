import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from config.settings import defaults, settings

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_REJECT = 4
EXIT_BUDGET = 5


class RunReport(BaseModel):
    """Machine-readable record of one CLI invocation."""

    model_config = ConfigDict(populate_by_name=True)

    report_schema: str = Field(default=defaults.report_schema, alias="schema")
    version: str = settings.app_version
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    input_digest: Optional[str] = None
    outputs: Dict[str, Any] = Field(default_factory=dict)
    timing: Optional[Dict[str, float]] = None

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude={"timing"} if self.timing is None else None)

    def render(self) -> str:
        return dumps(self.to_dict())


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def digest(*chunks: bytes) -> str:
    h = hashlib.sha256()
    for chunk in chunks:
        h.update(chunk)
    return f"sha256:{h.hexdigest()}"


def write_bytes(path: str, data: bytes):
    target = Path(path)
    if target.parent != Path("."):
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(data)


def write_json(path: str, data: Any):
    write_bytes(path, dumps(data).encode("utf-8"))
