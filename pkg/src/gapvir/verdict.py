"""Outcome of an irreducibility decision."""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Verdict:
    irreducible: bool
    reason: str = ""
    witness: Optional[str] = None
    vector: Any = None
    details: dict = field(default_factory=dict, compare=False)

    @classmethod
    def Irreducible(cls, reason="", **details):
        return cls(True, reason, details=details)

    @classmethod
    def Reducible(cls, witness, reason="", vector=None, **details):
        return cls(False, reason, witness, vector, details)

    @property
    def label(self):
        return "irreducible" if self.irreducible else "reducible"

    def __str__(self):
        if self.irreducible:
            return "Irreducible"
        return f"Reducible{{{self.witness}}}"

    def to_json(self):
        out = {"verdict": self.label, "reason": self.reason}
        if not self.irreducible:
            out["witness"] = self.witness
            if self.vector is not None:
                out["witness_vector"] = str(self.vector)
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in sorted(self.details.items())}
        return out


def _jsonable(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)
