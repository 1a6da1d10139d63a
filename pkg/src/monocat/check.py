"""Boolean check results that carry a diagnostic for the first failure."""

from typing import NamedTuple, Optional


class Check(NamedTuple):
    """Truthy verdict with an optional detail naming the first violation."""

    ok: bool
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


PASSED = Check(True)


def failed(detail: str) -> Check:
    return Check(False, detail)
