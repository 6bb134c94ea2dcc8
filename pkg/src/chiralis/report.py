"""Pass/fail verification reports with exact residual witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    cid: str
    description: str
    ok: bool
    residual: str = ""  # pretty-printed nonzero residual, empty when ok


@dataclass
class VerificationReport:
    theorem_id: str
    checks: list[Check] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, cid: str, description: str, ok: bool, residual: str = "") -> None:
        self.checks.append(Check(cid, description, ok, "" if ok else residual))

    def require_state_zero(self, cid: str, description: str, state) -> None:
        """Assert a residual state is exactly zero; print it verbatim if not."""
        from .expr import format_state

        self.add(cid, description, state.is_zero(), format_state(state))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "pass": self.ok,
            "checks": [
                {"id": c.cid, "description": c.description, "pass": c.ok, "residual": c.residual}
                for c in self.checks
            ],
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        n_ok = sum(1 for c in self.checks if c.ok)
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.theorem_id}: {n_ok}/{len(self.checks)} checks"
