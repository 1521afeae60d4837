"""Structured pass/fail records emitted by every checker."""

from dataclasses import dataclass, field
from fractions import Fraction

from skewrec.modules import PdResult

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CheckReport:
    """One checker outcome.

    kind distinguishes what a Fail means: for a "criterion" it is a
    mathematical fact about the instance (e.g. no singular equivalence);
    for a "cross_check" it contradicts a theorem and signals a bug or a
    counterexample.  "construction" covers validation-style checks.
    """

    name: str
    instance: str
    kind: str
    hypotheses: dict = field(default_factory=dict)
    measurements: dict = field(default_factory=dict)
    verdict: str = PASS
    inconclusive_bound: int = None
    witnesses: dict = None

    def to_json_dict(self):
        out = {
            "name": self.name,
            "instance": self.instance,
            "kind": self.kind,
            "hypotheses": _jsonable(self.hypotheses),
            "measurements": _jsonable(self.measurements),
            "verdict": self.verdict,
            "witnesses": _jsonable(self.witnesses),
        }
        if self.inconclusive_bound is not None:
            out["inconclusive_bound"] = self.inconclusive_bound
        return out


def _jsonable(value):
    if isinstance(value, PdResult):
        return value.to_json()
    if isinstance(value, Fraction):
        return (str(value.numerator) if value.denominator == 1
                else f"{value.numerator}/{value.denominator}")
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, CheckReport):
        return value.to_json_dict()
    raise TypeError(f"cannot serialize {type(value)} into a report")
