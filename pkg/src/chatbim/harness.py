"""Batch evaluation harness: run prompts through the pipeline and aggregate
per-prompt pass-rate statistics (mean and sample standard deviation across
repeated runs, matching the three-run protocol of the metric tables)."""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .agents.backend import ChatBackend
from .agents.mock import MockChatBackend, MockTranscript
from .orchestrator.engine import TurnEngine, metrics_snapshot
from .orchestrator.session import Session

CSV_COLUMNS = (
    "prompt_id",
    "run",
    "pass_rate",
    "issues_t0",
    "issues_t1",
    "issues_t2",
    "issues_t3",
    "seconds",
    "pass_rate_sd",
)


@dataclass
class EvalRow:
    prompt_id: str
    run_index: int
    pass_rate: float
    issue_series: list[int]
    seconds: float
    element_counts: dict[str, int] = field(default_factory=dict)

    def csv_record(self) -> list[str]:
        series = [str(v) for v in self.issue_series] + [""] * (4 - len(self.issue_series))
        return [
            str(self.prompt_id),
            str(self.run_index),
            f"{self.pass_rate:.4f}",
            *series[:4],
            f"{self.seconds:.3f}",
            "",
        ]


def load_corpus(path: str | Path) -> list[dict]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, list):
        raise ValueError("corpus must be a JSON array of {id, text} entries")
    return payload


def run_prompt(
    text: str,
    backend: ChatBackend,
    prompt_id: str = "prompt",
    run_index: int = 1,
    seed: int = 0,
    check_via_serialization: bool = False,
    zero_clock: bool = False,
) -> tuple[Session, EvalRow]:
    session = Session(backend, seed=seed, check_via_serialization=check_via_serialization)
    started = time.time()
    TurnEngine(session).handle_instruction(text)
    elapsed = 0.0 if zero_clock else time.time() - started
    metrics = metrics_snapshot(session)
    row = EvalRow(
        prompt_id=prompt_id,
        run_index=run_index,
        pass_rate=metrics["pass_rate"] if metrics["pass_rate"] is not None else 0.0,
        issue_series=metrics["issue_series"],
        seconds=elapsed,
        element_counts=session.model.category_counts(),
    )
    return session, row


def mock_backend_factory(mock_path: str | Path):
    """Per-run backend factory from a transcript file, or a directory holding
    one transcript per prompt id ({id}.json)."""
    mock_path = Path(mock_path)
    if mock_path.is_dir():
        cache: dict[str, MockTranscript] = {}

        def factory(prompt_id: str) -> ChatBackend:
            if prompt_id not in cache:
                cache[prompt_id] = MockTranscript.load(mock_path / f"{prompt_id}.json")
            return MockChatBackend(cache[prompt_id])

        return factory
    transcript = MockTranscript.load(mock_path)

    def factory(prompt_id: str) -> ChatBackend:
        return MockChatBackend(transcript)

    return factory


def run_batch(
    corpus: list[dict],
    repeats: int,
    backend_factory,
    workers: int = 4,
    check_via_serialization: bool = False,
    zero_clock: bool = False,
) -> list[EvalRow]:
    jobs = [
        (str(prompt["id"]), str(prompt["text"]), run)
        for prompt in corpus
        for run in range(1, repeats + 1)
    ]

    def execute(job):
        prompt_id, text, run = job
        _, row = run_prompt(
            text,
            backend_factory(prompt_id),
            prompt_id=prompt_id,
            run_index=run,
            seed=run,
            check_via_serialization=check_via_serialization,
            zero_clock=zero_clock,
        )
        return row

    if workers <= 1:
        return [execute(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(execute, jobs))


def aggregate_rates(rates: list[float]) -> tuple[float, float]:
    """Mean and sample standard deviation (n - 1 denominator)."""
    mean = sum(rates) / len(rates)
    sd = statistics.stdev(rates) if len(rates) > 1 else 0.0
    return mean, sd


def rows_to_csv(rows: list[EvalRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    by_prompt: dict[str, list[EvalRow]] = {}
    for row in rows:
        by_prompt.setdefault(row.prompt_id, []).append(row)
    for prompt_id in by_prompt:
        by_prompt[prompt_id].sort(key=lambda r: r.run_index)
    for prompt_id, group in by_prompt.items():
        for row in group:
            writer.writerow(row.csv_record())
        mean, sd = aggregate_rates([r.pass_rate for r in group])
        mean_seconds = sum(r.seconds for r in group) / len(group)
        writer.writerow(
            [prompt_id, "avg", f"{mean:.4f}", "", "", "", "", f"{mean_seconds:.3f}", f"{sd:.4f}"]
        )
    return buffer.getvalue()
