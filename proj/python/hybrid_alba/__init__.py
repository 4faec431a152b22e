"""Python front end for the hybrid correspondence engine."""

import json

from ._core import ParseError, parse, translate, verify
from ._core import classify_json as _classify_json
from ._core import run_json as _run_json

__all__ = ["ParseError", "parse", "classify", "run", "translate", "verify"]


def classify(text):
    """Sahlqvist classification: {sahlqvist, variables, order_types}."""
    return json.loads(_classify_json(text))


def run(text, order_type=None, simplify=False):
    """Full run as a dict, including every rewrite step."""
    return json.loads(_run_json(text, order_type, simplify))
