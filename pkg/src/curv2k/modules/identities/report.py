from __future__ import annotations

from typing import Iterable, Literal

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "fail", "not_applicable"]
Kind = Literal["identity", "inequality"]


class IdentityReport(BaseModel):
    """
    🧾 IDENTITY REPORT - One verified (or skipped) identity or inequality

    HOW PASS IS DECIDED:
    rel_err = abs_err / max(|rhs|, scale), where scale is the magnitude of the
    terms being compared; when both are zero rel_err = abs_err. pass means
    rel_err <= tolerance. For inequalities lhs >= rhs, abs_err is the shortfall
    max(0, rhs - lhs).

    Checks outside their hypotheses come back with status "not_applicable"
    and pass = false; they are never counted as verified.
    """

    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., description="Identity label")
    lhs: float = Field(..., description="Left-hand side value")
    rhs: float = Field(..., description="Right-hand side value")
    abs_err: float = Field(..., description="|lhs - rhs| (shortfall for inequalities)")
    rel_err: float = Field(..., description="abs_err divided by the comparison scale")
    passed: bool = Field(..., alias="pass", description="Whether rel_err is within tolerance")
    tolerance: float = Field(..., description="Relative tolerance applied")
    status: Status = Field("pass", description="pass, fail or not_applicable")
    kind: Kind = Field("identity", description="identity (lhs == rhs) or inequality (lhs >= rhs)")
    scale: float = Field(0.0, description="Magnitude used to normalize abs_err")
    detail: str = Field("", description="Why a check was skipped, or other context")

    @property
    def applicable(self) -> bool:
        return self.status != "not_applicable"

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, include=set(JSON_FIELDS))


JSON_FIELDS = ("name", "lhs", "rhs", "abs_err", "rel_err", "passed", "tolerance")


def compare(
    name: str,
    lhs: float,
    rhs: float,
    tolerance: float,
    *,
    scale: float = 0.0,
    kind: Kind = "identity",
    detail: str = "",
) -> IdentityReport:
    lhs, rhs = float(lhs), float(rhs)
    abs_err = max(0.0, rhs - lhs) if kind == "inequality" else abs(lhs - rhs)
    denominator = max(abs(rhs), abs(scale))
    rel_err = abs_err / denominator if denominator > 0.0 else abs_err
    passed = rel_err <= tolerance
    return IdentityReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        passed=passed,
        tolerance=tolerance,
        status="pass" if passed else "fail",
        kind=kind,
        scale=abs(scale),
        detail=detail,
    )


def not_applicable(name: str, tolerance: float, reason: str, *, kind: Kind = "identity") -> IdentityReport:
    return IdentityReport(
        name=name,
        lhs=0.0,
        rhs=0.0,
        abs_err=0.0,
        rel_err=0.0,
        passed=False,
        tolerance=tolerance,
        status="not_applicable",
        kind=kind,
        detail=reason,
    )


def to_json_lines(reports: Iterable[IdentityReport]) -> str:
    """One JSON object per line: {name, lhs, rhs, abs_err, rel_err, pass, tolerance}."""
    return "\n".join(report.to_json() for report in reports)


def to_table(reports: Iterable[IdentityReport]) -> str:
    """Aligned columns, floats at 6 significant digits."""
    header = ["name", "lhs", "rhs", "abs_err", "rel_err", "pass", "tolerance"]
    rows = [
        [
            report.name,
            f"{report.lhs:.6g}",
            f"{report.rhs:.6g}",
            f"{report.abs_err:.6g}",
            f"{report.rel_err:.6g}",
            "n/a" if report.status == "not_applicable" else str(report.passed).lower(),
            f"{report.tolerance:.6g}",
        ]
        for report in reports
    ]
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [header, *rows]]
    return "\n".join(lines)
