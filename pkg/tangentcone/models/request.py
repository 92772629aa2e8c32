from dataclasses import dataclass, field
from typing import Dict, Tuple

from tangentcone.schemas.request_schema import FILE_FLAGS


@dataclass(frozen=True)
class CommandRequest:
    """One CLI invocation: subcommand name plus its flags as raw strings."""

    subcommand: str
    flags: Dict[str, str] = field(default_factory=dict)

    @property
    def input_paths(self) -> Tuple[str, ...]:
        return tuple(self.flags[name] for name in FILE_FLAGS if self.flags.get(name))
