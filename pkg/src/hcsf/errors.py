"""Domain errors carrying a stable machine-readable name.

The CLI prints ``err.name`` on stderr and exits 1; tests match on names
rather than messages.
"""

from __future__ import annotations


class HcsfError(ValueError):
    """Error with a stable kebab-case name, e.g. ``not-bipartite``."""

    def __init__(self, name: str, message: str = ""):
        self.name = name
        super().__init__(f"{name}: {message}" if message else name)
