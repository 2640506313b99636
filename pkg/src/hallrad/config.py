"""Runtime limits.  ``HALLRAD_CAP`` overrides the element-processing cap."""

import os

DEFAULT_ELEMENT_CAP = 100_000
DEFAULT_INDEX_CAP = 1_000_000
DEGREE_CAP = 100_000


def element_cap() -> int:
    value = os.environ.get("HALLRAD_CAP")
    if value:
        return int(value)
    return DEFAULT_ELEMENT_CAP


class CapExceeded(RuntimeError):
    """An exhaustive sweep would exceed the configured cap."""
