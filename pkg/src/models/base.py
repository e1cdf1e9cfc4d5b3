from pydantic import BaseModel, ConfigDict

SCHEMA_VERSION = 1


class ArtifactModel(BaseModel):
    """Base for everything that is serialized into a report artifact."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    def to_json_dict(self) -> dict:
        # python mode keeps +-inf as floats; the writer emits them as JSON constants
        return self.model_dump(mode="python")
