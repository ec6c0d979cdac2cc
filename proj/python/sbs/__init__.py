"""Short secret sharing over randomized GF(2^8) fields."""

from ._sbs import (
    SbsError,
    combine,
    count_irreducible,
    fields,
    inspect,
    recover_range,
    split,
)

__all__ = [
    "SbsError",
    "combine",
    "count_irreducible",
    "fields",
    "inspect",
    "recover_range",
    "split",
]
