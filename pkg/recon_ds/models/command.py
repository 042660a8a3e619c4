"""Command invocation model."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass
class CommandConfig:
    """Validated options of one CLI invocation."""

    subcommand: str
    family: Optional[str] = None
    n: Optional[int] = None
    n_range: Optional[Tuple[int, int]] = None
    residues: Dict[str, int] = field(default_factory=dict)
    structural: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    output: Optional[str] = None
    jobs: int = 1
    format: str = "text"

    def to_dict(self) -> Dict:
        return {
            "subcommand": self.subcommand,
            "family": self.family,
            "n": self.n,
            "n_range": list(self.n_range) if self.n_range else None,
            "residues": self.residues,
            "structural": {k: str(v) for k, v in self.structural.items()},
            "seed": self.seed,
            "output": self.output,
            "jobs": self.jobs,
            "format": self.format,
        }
