"""Command line entry points.

`serve` hosts the HTTP session service for the browser UI; the remaining
subcommands are batch/eval tooling that drive the same pipeline in-process:
running prompts, checking model files, and executing modeling scripts.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .agents.backend import HttpBackendConfig, HttpChatBackend, TranscriptLog
from .checker.bcf import export_bcf_lite, render_issues_text
from .checker.engine import check, pass_rate
from .checker.rules import catalog_manifest
from .errors import ChatBimError, SchemaViolation
from .harness import load_corpus, mock_backend_factory, rows_to_csv, run_batch, run_prompt
from .interpreter.evaluator import Interpreter
from .kernel.ifcjson import dumps_canonical, model_deserialize, model_serialize
from .kernel.mesh import mesh_export
from .kernel.model import Model
from .orchestrator.engine import metrics_snapshot


@click.group()
def main():
    """Chat-driven building model generation."""


def _backend_from_env():
    url = os.environ.get("BACKEND_URL", "")
    if not url:
        return None
    log_path = os.environ.get("CHATBIM_TRANSCRIPT_LOG", "")
    return HttpChatBackend(
        HttpBackendConfig(
            url=url,
            model=os.environ.get("BACKEND_MODEL", ""),
            api_key=os.environ.get("BACKEND_KEY", ""),
            timeout_seconds=float(os.environ.get("CHATBIM_BACKEND_TIMEOUT", "120")),
            max_tokens=int(os.environ["CHATBIM_MAX_TOKENS"]) if "CHATBIM_MAX_TOKENS" in os.environ else None,
        ),
        log=TranscriptLog(log_path) if log_path else None,
    )


def _resolve_prompt(value: str) -> str:
    path = Path(value)
    if path.is_file():
        return path.read_text(encoding="utf-8").strip()
    looks_like_path = os.sep in value or value.endswith((".txt", ".md", ".json"))
    if looks_like_path:
        raise click.UsageError(f"prompt file not found: {value}")
    return value


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--mock", "mock_path", type=click.Path(exists=True), default=None, help="Mock transcript for offline runs.")
@click.option("--check-via-serialization", is_flag=True, default=False)
def serve(host: str, port: int, mock_path: str | None, check_via_serialization: bool):
    """Host the HTTP session service."""
    import uvicorn

    from .service.app import ServiceConfig, create_app

    config = ServiceConfig(
        host=host,
        port=port,
        backend_url=os.environ.get("BACKEND_URL", ""),
        backend_model=os.environ.get("BACKEND_MODEL", ""),
        backend_key=os.environ.get("BACKEND_KEY", ""),
        mock_transcript_path=mock_path,
        check_via_serialization=check_via_serialization,
        transcript_log_path=os.environ.get("CHATBIM_TRANSCRIPT_LOG") or None,
        backend_timeout_seconds=float(os.environ.get("CHATBIM_BACKEND_TIMEOUT", "120")),
        backend_max_tokens=int(os.environ["CHATBIM_MAX_TOKENS"]) if "CHATBIM_MAX_TOKENS" in os.environ else None,
    )
    uvicorn.run(create_app(config), host=host, port=port)


@main.command()
@click.option("--prompt", required=True, help="Prompt text or a path to a prompt file.")
@click.option("--mock", "mock_path", type=click.Path(exists=True), default=None)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--check-via-serialization", is_flag=True, default=False)
def run(prompt: str, mock_path: str | None, out_dir: str | None, seed: int, check_via_serialization: bool):
    """Run one prompt through the agent pipeline and report the results."""
    text = _resolve_prompt(prompt)
    if mock_path is not None:
        backend = mock_backend_factory(mock_path)("prompt")
    else:
        backend = _backend_from_env()
        if backend is None:
            raise click.UsageError("no backend: set BACKEND_URL or pass --mock")
    session, row = run_prompt(
        text, backend, seed=seed, check_via_serialization=check_via_serialization, zero_clock=mock_path is not None
    )
    report = session.latest_report
    if out_dir is not None:
        target = Path(out_dir)
        target.mkdir(parents=True, exist_ok=True)
        (target / "model.json").write_text(dumps_canonical(model_serialize(session.model)), encoding="utf-8")
        (target / "mesh.json").write_text(json.dumps(mesh_export(session.model)), encoding="utf-8")
        (target / "issues.json").write_text(
            json.dumps(export_bcf_lite(report) if report else [], indent=2), encoding="utf-8"
        )
        (target / "metrics.json").write_text(json.dumps(metrics_snapshot(session), indent=2), encoding="utf-8")
    counts = session.model.category_counts()
    click.echo(f"status: {session.status.value}")
    click.echo(f"elements: {json.dumps(counts, sort_keys=True)}")
    click.echo(f"issue series: {row.issue_series}")
    click.echo(f"pass_rate: {row.pass_rate:.4f}")


@main.command()
@click.option("--corpus", required=True, type=click.Path(exists=True))
@click.option("--repeats", default=3, show_default=True, type=int)
@click.option("--mock", "mock_path", type=click.Path(exists=True), default=None)
@click.option("--workers", default=4, show_default=True, type=int)
@click.option("--out", "out_csv", type=click.Path(dir_okay=False), default=None)
@click.option("--check-via-serialization", is_flag=True, default=False)
def batch(corpus: str, repeats: int, mock_path: str | None, workers: int, out_csv: str | None, check_via_serialization: bool):
    """Run a prompt corpus repeatedly and emit per-run rows plus aggregates."""
    prompts = load_corpus(corpus)
    if mock_path is not None:
        factory = mock_backend_factory(mock_path)
    else:
        if _backend_from_env() is None:
            raise click.UsageError("no backend: set BACKEND_URL or pass --mock")

        def factory(prompt_id: str):
            return _backend_from_env()

    rows = run_batch(
        prompts,
        repeats,
        factory,
        workers=workers,
        check_via_serialization=check_via_serialization,
        zero_clock=mock_path is not None,
    )
    text = rows_to_csv(rows)
    if out_csv is not None:
        Path(out_csv).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out_csv} ({len(rows)} rows)")
    else:
        click.echo(text, nl=False)


@main.command(name="check")
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
def check_command(model_file: str):
    """Check an exported model document against all 30 rules."""
    try:
        doc = json.loads(Path(model_file).read_text(encoding="utf-8"))
        model = model_deserialize(doc)
    except (ValueError, SchemaViolation) as exc:
        click.echo(f"invalid model document: {exc}", err=True)
        sys.exit(2)
    report = check(model)
    passed = sum(1 for ok in report.pass_map.values() if ok)
    click.echo(f"{passed}/{len(report.pass_map)} rules passed")
    if report.issues:
        click.echo(render_issues_text(report))
        sys.exit(1)


@main.command(name="exec")
@click.argument("script_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", "out_file", type=click.Path(dir_okay=False), default=None)
def exec_command(script_file: str, seed: int, out_file: str | None):
    """Execute a modeling script on an empty model and emit its JSON export."""
    source = Path(script_file).read_text(encoding="utf-8")
    model = Model(seed=seed)
    outcome = Interpreter(model).execute(source)
    if outcome.output:
        click.echo(outcome.output, err=True, nl=False)
    if not outcome.ok:
        click.echo(outcome.render(), err=True)
        sys.exit(1)
    document = dumps_canonical(model_serialize(model))
    if out_file is not None:
        Path(out_file).write_text(document, encoding="utf-8")
        click.echo(f"wrote {out_file}")
    else:
        click.echo(document)


@main.command()
def rules():
    """Print the machine-readable rule catalog."""
    click.echo(json.dumps(catalog_manifest(), indent=2))


if __name__ == "__main__":
    main()
