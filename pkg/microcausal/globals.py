"""
Microcausal Global State

Holds the settings of the active run. Installed and cleared by
microcausal.lifespan.run_context.
"""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from microcausal.settings import Settings


settings: Optional["Settings"] = None


def get_settings() -> "Settings":
    """Get the settings of the active run."""
    if settings is None:
        raise RuntimeError("Settings not initialized. Call run_context first.")
    return settings
