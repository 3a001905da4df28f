"""The triple loop: human-in-the-loop turns, self-reflective code repair, and
checker-driven quality optimization.

Loop bounds are strict: at most 3 code regenerations per repair loop and at
most 4 checker passes (t = 0..3) per quality loop. Hitting either cap parks
the session in awaiting_human; the next instruction resumes with the full
global memory so the dialogue continues where it stopped.
"""

from __future__ import annotations

import time

from ..agents.roles import AgentSuite
from ..agents.templates import Role
from ..checker.bcf import CLEAN_MESSAGE, export_bcf_lite, render_issues_text
from ..checker.engine import IssueReport, check, issue_amount, pass_rate
from ..errors import BackendError, MalformedToolCall, SessionBusy
from ..interpreter.parser import ScriptSource
from ..tools.catalog import catalog_text
from .events import EventKind
from .session import Session, SessionStatus

SELF_REFLECTION_CAP = 3  # regenerations; executions are capped at 4
QUALITY_ITERATION_CAP = 3  # t runs 0..3, so 4 checker passes


class TurnEngine:
    """Runs one user instruction through the full pipeline on a session."""

    def __init__(
        self,
        session: Session,
        suite: AgentSuite | None = None,
        self_reflection_cap: int = SELF_REFLECTION_CAP,
        quality_iteration_cap: int = QUALITY_ITERATION_CAP,
    ):
        self.session = session
        self.suite = suite if suite is not None else AgentSuite(session.backend)
        self.catalog = catalog_text()
        self.self_reflection_cap = self_reflection_cap
        self.quality_iteration_cap = quality_iteration_cap

    # -- entry point -------------------------------------------------------------

    def handle_instruction(self, instruction: str) -> None:
        session = self.session
        if session.status not in (SessionStatus.IDLE, SessionStatus.AWAITING_HUMAN):
            raise SessionBusy(session.id)
        session.status = SessionStatus.RUNNING
        session.begin_turn_stream()
        session.turn_issue_series = []
        session.emit("user", EventKind.MESSAGE, {"text": instruction})
        try:
            self._run_turn(instruction)
        except (BackendError, MalformedToolCall) as exc:
            session.emit("system", EventKind.HUMAN_REQUIRED, {"reason": f"backend failure: {exc}"})
            session.status = SessionStatus.AWAITING_HUMAN
            session.memory.purge_local()
        finally:
            if session.status == SessionStatus.RUNNING:
                session.status = SessionStatus.IDLE
            session.end_turn_stream()

    def _run_turn(self, instruction: str) -> None:
        session = self.session

        session.emit("system", EventKind.LOOP_TRANSITION, {"loop": "enhancement"})
        enhancement = self.suite.instruction_enhancer_turn(
            instruction, self.catalog, session.memory.chat_history_for_enhancer()
        )
        for consultation in enhancement.consultations:
            session.emit(
                Role.INSTRUCTION_ENHANCER.value,
                EventKind.MESSAGE,
                {"text": f"Consulting the Architect: {consultation.query}", "query": consultation.query},
            )
            session.emit(Role.ARCHITECT.value, EventKind.MESSAGE, {"text": consultation.design})
        session.emit(Role.INSTRUCTION_ENHANCER.value, EventKind.MESSAGE, {"text": enhancement.enhanced})

        session.emit("system", EventKind.LOOP_TRANSITION, {"loop": "code_generation"})
        source = self.suite.programmer_turn(
            enhancement.enhanced, self.catalog, session.memory.chat_history_for_programmer()
        )
        session.emit(Role.PROGRAMMER.value, EventKind.CODE, {"source": source.text})

        final = self._self_reflection_loop(source)
        if final is None:
            return  # aborted; status already set

        session.memory.remember_turn(instruction, enhancement.enhanced, final.text)
        session.memory.remember_loop_code("", final.text)
        self._quality_loop()

    # -- self-reflection loop ---------------------------------------------------

    def _self_reflection_loop(self, source: ScriptSource) -> ScriptSource | None:
        """Execute, regenerating on errors up to the cap. Returns the source
        that ran cleanly, or None after aborting to the human."""
        session = self.session
        failed_codes: list[str] = []
        for attempt in range(self.self_reflection_cap + 1):
            session.emit(
                "system", EventKind.LOOP_TRANSITION, {"loop": "self_reflection", "n": attempt}
            )
            outcome = session.interpreter.execute(source)
            session.emit(
                "interpreter",
                EventKind.INTERPRETER_RESULT,
                {
                    "ok": outcome.ok,
                    "text": outcome.render(),
                    "output": outcome.output,
                    "error": None
                    if outcome.error is None
                    else {
                        "kind": outcome.error.kind.value,
                        "message": outcome.error.message,
                        "line": outcome.error.line,
                        "column": outcome.error.column,
                        "snippet": outcome.error.offending_snippet,
                    },
                },
            )
            if outcome.ok:
                return source
            if attempt == self.self_reflection_cap:
                session.emit(
                    "system",
                    EventKind.HUMAN_REQUIRED,
                    {"reason": f"code errors persisted after {self.self_reflection_cap} repair attempts"},
                )
                session.status = SessionStatus.AWAITING_HUMAN
                session.memory.purge_local()
                return None
            failed_codes.append(source.text)
            history = "\n".join(f"Programmer: {code}" for code in failed_codes)
            source = self.suite.programmer_turn(outcome.error.render(), self.catalog, history)
            session.emit(Role.PROGRAMMER.value, EventKind.CODE, {"source": source.text})
        return None  # pragma: no cover

    # -- quality loop -------------------------------------------------------------

    def _check_once(self, iteration: int) -> IssueReport:
        session = self.session
        session.emit("system", EventKind.LOOP_TRANSITION, {"loop": "quality", "t": iteration})
        report = check(session.checkable_model(), model_ref=session.model.ref)
        session.latest_report = report
        amount = issue_amount(report)
        session.turn_issue_series.append(amount)
        session.iteration_log.append(
            {
                "phase": "quality",
                "iteration": iteration,
                "issue_amount": amount,
                "pass_rate": pass_rate(report),
                "timestamp": time.time(),
            }
        )
        session.emit(
            "checker",
            EventKind.CHECKER_REPORT,
            {
                "text": render_issues_text(report),
                "issue_amount": amount,
                "pass_rate": pass_rate(report),
                "issues": export_bcf_lite(report),
            },
        )
        return report

    def _quality_loop(self) -> None:
        session = self.session
        for iteration in range(self.quality_iteration_cap + 1):
            report = self._check_once(iteration)
            if not report.issues:
                session.memory.purge_local()
                return
            if iteration == self.quality_iteration_cap:
                session.memory.purge_local()
                session.emit(
                    "system",
                    EventKind.HUMAN_REQUIRED,
                    {"reason": f"issues remain after {self.quality_iteration_cap} optimization iterations"},
                )
                session.status = SessionStatus.AWAITING_HUMAN
                return
            suggestion = self.suite.reviewer_turn(
                session.memory.loop_code_text(), render_issues_text(report), self.catalog
            )
            session.emit(Role.REVIEWER.value, EventKind.MESSAGE, {"text": suggestion})
            history = "\n".join(f"Programmer: {entry.code}" for entry in session.memory.local_entries)
            source = self.suite.programmer_turn(suggestion, self.catalog, history)
            session.emit(Role.PROGRAMMER.value, EventKind.CODE, {"source": source.text})
            final = self._self_reflection_loop(source)
            if final is None:
                session.memory.purge_local()
                return
            session.memory.remember_loop_code(suggestion, final.text)


def metrics_snapshot(session: Session) -> dict:
    """Per-iteration issue counts of the latest turn plus the final pass rate."""
    rate = None if session.latest_report is None else pass_rate(session.latest_report)
    return {"issue_series": list(session.turn_issue_series), "pass_rate": rate}
