# ramseytype - Settings
# Search limits and run-mode settings shared by the library and the CLI

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class SearchLimits:
    """Caps for the exact exponential searches."""
    exact_cap: int = 24
    node_budget: int = 5_000_000
    enumeration_cap: int = 8
    path_exact_cap: int = 18
    mono_clique_cap: int = 64


@dataclass
class WitnessSettings:
    """How the witness pipelines pick their working thresholds."""
    mode: str = "best-effort"
    threshold: Optional[int] = None
    exhaustive_fallback: bool = True

    def __post_init__(self) -> None:
        if self.mode not in ("best-effort", "paper"):
            raise ValueError(f"unknown witness mode '{self.mode}'")

    @property
    def fallback_enabled(self) -> bool:
        # paper mode never falls back to complete search
        return self.exhaustive_fallback and self.mode == "best-effort"


@dataclass
class HarnessSettings:
    """Corpus scan behaviour."""
    jobs: int = 1
    lenient: bool = False
    progress: bool = False


@dataclass
class Settings:
    """Complete run settings."""
    limits: SearchLimits = field(default_factory=SearchLimits)
    witness: WitnessSettings = field(default_factory=WitnessSettings)
    harness: HarnessSettings = field(default_factory=HarnessSettings)

    @classmethod
    def default(cls) -> "Settings":
        """Create settings with default values."""
        return cls(
            limits=SearchLimits(),
            witness=WitnessSettings(),
            harness=HarnessSettings(),
        )
