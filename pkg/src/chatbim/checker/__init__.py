from .bcf import CLEAN_MESSAGE, export_bcf_lite, render_issues_text
from .engine import Issue, IssueReport, check, issue_amount, pass_rate, solids_intersect
from .rules import RULES, RULE_INDEX, Rule, catalog_manifest

__all__ = [
    "CLEAN_MESSAGE",
    "Issue",
    "IssueReport",
    "RULES",
    "RULE_INDEX",
    "Rule",
    "catalog_manifest",
    "check",
    "export_bcf_lite",
    "issue_amount",
    "pass_rate",
    "render_issues_text",
    "solids_intersect",
]
