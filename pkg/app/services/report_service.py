from typing import List

from app.enums.exit_code_enum import ExitCodeEnum
from app.enums.output_mode_enum import OutputModeEnum
from app.enums.verdict_enum import VerdictEnum
from app.schemas.report_schema import Check, Report


class ReportService:
    CHECK_PREFIX = "CHECK"

    def render(self, report: Report, mode: OutputModeEnum) -> List[str]:
        if mode == OutputModeEnum.MACHINE:
            return list(report.listing) + [self.check_line(check) for check in report.checks]

        lines = [report.title]
        lines += [f"  {entry}" for entry in report.listing]
        for check in report.checks:
            shown = f"  {check.name}: {check.verdict.value}"
            if check.witness is not None:
                shown += f" ({check.witness})"
            lines.append(shown)
            lines += [f"      {detail}" for detail in check.details]
        lines += list(report.notes)
        if report.checks:
            lines.append(f"verdict: {report.verdict.value}")
        return lines

    def check_line(self, check: Check) -> str:
        line = f"{self.CHECK_PREFIX} {check.name} {check.verdict.value}"
        if check.witness is not None:
            line += f" witness={check.witness}"
        return line

    @staticmethod
    def exit_code(report: Report) -> ExitCodeEnum:
        if not report.checks:
            return ExitCodeEnum.OK
        verdict = report.verdict
        if verdict == VerdictEnum.FAIL:
            return ExitCodeEnum.FAILED
        if verdict == VerdictEnum.INCONCLUSIVE:
            return ExitCodeEnum.INCONCLUSIVE
        return ExitCodeEnum.OK
