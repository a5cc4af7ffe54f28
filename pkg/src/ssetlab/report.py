"""Structured reports shared by the scenario runner and the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .certificates import LEDGER_VERSION


@dataclass
class ReportItem:
    item: str
    claim: str
    status: str
    witness: object = None
    bounded: bool = False
    detail: str = ""
    seconds: float = 0.0

    @property
    def accepted(self) -> bool:
        return self.status == "accepted"

    def as_dict(self, timings: bool = False) -> dict:
        out = {"item": self.item, "claim": self.claim, "status": self.status, "bounded": self.bounded}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        if timings:
            out["timings"] = {"seconds": round(self.seconds, 4)}
        return out


@dataclass
class Report:
    items: list[ReportItem] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.items) and all(i.accepted for i in self.items)

    def failing(self) -> ReportItem | None:
        return next((i for i in self.items if not i.accepted), None)

    def as_dict(self, timings: bool = False) -> dict:
        return {
            "ledger_version": LEDGER_VERSION,
            "params": self.params,
            "status": "accepted" if self.ok else "rejected",
            "items": [i.as_dict(timings) for i in self.items],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), indent=2, ensure_ascii=False) + "\n"

    def human(self, timings: bool = False, witnesses: bool = False) -> str:
        lines = []
        for i in self.items:
            tag = " [bounded]" if i.bounded else ""
            t = f" ({i.seconds:.3f}s)" if timings else ""
            lines.append(f"{i.status.upper():9s} {i.item}: {i.claim}{tag}{t}")
            if i.detail:
                lines.append(f"          {i.detail}")
            if witnesses and i.witness is not None:
                lines.extend(_render(i.witness, "          "))
        lines.append(f"overall: {'accepted' if self.ok else 'rejected'} (trusted-rule ledger v{LEDGER_VERSION})")
        return "\n".join(lines) + "\n"


def _render(w, indent):
    if isinstance(w, dict):
        out = []
        for k, v in w.items():
            if isinstance(v, (dict, list)) and len(json.dumps(v)) > 70:
                out.append(f"{indent}{k}:")
                out.extend(_render(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {_flat(v)}")
        return out
    if isinstance(w, list):
        return [f"{indent}- {_flat(v)}" for v in w]
    return [f"{indent}{_flat(w)}"]


def _flat(v):
    if isinstance(v, str):
        return v
    return json.dumps(v, ensure_ascii=False)
