"""Result records for theorem verification runs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one theorem check at one parameter tuple.

    status is 'pass', 'fail' or 'skipped' (hypothesis not satisfied, so
    nothing was claimed).  Failures always carry a witness string naming
    the first offending object.
    """

    theorem_id: str
    params: dict
    status: str
    witness: str | None = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a failure report requires a witness")

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "params": dict(self.params),
            "status": self.status,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
        }


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
