"""BCF-lite: the issue-exchange JSON and the text form agents read."""

from __future__ import annotations

import json

from .engine import IssueReport

CLEAN_MESSAGE = "No issue was found in the model!"


def export_bcf_lite(report: IssueReport) -> list[dict]:
    """One record per issue; field names mirror the extracted issue layout."""
    return [
        {
            "Issue": issue.title,
            "Issue description": issue.description,
            "Related element uuids": list(issue.related_uuids),
        }
        for issue in report.issues
    ]


def render_issues_text(report: IssueReport) -> str:
    """Bullet-point text handed to the review agent (and shown in the UI)."""
    if not report.issues:
        return CLEAN_MESSAGE
    blocks = []
    for issue in report.issues:
        blocks.append(
            f"- Issue: {issue.title}\n"
            f"- Issue description: {issue.description}\n"
            f"- Related element uuids: {json.dumps(list(issue.related_uuids))}"
        )
    return "\n".join(blocks)
