from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Hard limits on every enumeration in the package."""

    max_morphisms: int = 64
    max_search: int = 10**7
    max_candidates: int = 2**20
    max_groupoid: int = 4


DEFAULT_BOUNDS = Bounds()
