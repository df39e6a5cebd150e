from dataclasses import dataclass, field


@dataclass
class BracketReport:
    """Outcome of one identity check.

    ``passed`` is true exactly when ``residual`` is literally zero.
    ``details`` holds sub-checks for composite identities.
    """
    identity_name: str
    arguments: list
    residual: object
    passed: bool = None
    seed: int = None
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.passed is None:
            self.passed = not self.residual and all(d.passed for d in self.details)

    def __bool__(self):
        return self.passed

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        args = ", ".join(str(a) for a in self.arguments)
        return "%s  %s(%s)" % (status, self.identity_name, args)

    def to_dict(self):
        return {
            "name": self.identity_name,
            "args": [str(a) for a in self.arguments],
            "residual": str(self.residual) if self.residual is not None else "0",
            "passed": bool(self.passed),
        }


def combine(name, arguments, reports, seed=None):
    """Bundle sub-reports; the residual is the first nonzero one."""
    residual = next((r.residual for r in reports if not r.passed), None)
    return BracketReport(name, arguments, residual, seed=seed, details=list(reports))
