"""chatbim: natural-language building modeling with script-writing agents,
a sandboxed interpreter, and a rule-driven quality loop."""

__version__ = "0.1.0"
