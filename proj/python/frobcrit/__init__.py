"""Python front end for the frobcrit C++ core.

Indices (J, Weyl words) are 1-based, rationals are strings "a" or "a/b",
matching the CLI's JSON.
"""

import json as _json

from . import _frobcrit
from ._frobcrit import FrobcritError

__all__ = [
    "FrobcritError",
    "branch",
    "character",
    "check",
    "conjugated_borel_check",
    "example_names",
    "lemma53_min_p",
    "num_positive_roots",
    "restrict",
    "run_cli",
    "run_example",
    "validate",
    "verify_identities",
    "weyl_order",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _weight(w):
    return _json.dumps([str(x) for x in w]) if not isinstance(w, str) else w


def check(input_doc):
    """Evaluate the criteria for an input document (dict or JSON text)."""
    return _json.loads(_frobcrit.check(_dump(input_doc)))


def run_example(name, p=3):
    """Return (document, matched) for a worked example."""
    doc, matched = _frobcrit.run_example(name, p)
    return _json.loads(doc), matched


def example_names():
    return list(_frobcrit.example_names())


def lemma53_min_p(embedding):
    return _frobcrit.lemma53_min_p(_dump(embedding))


def validate(embedding):
    return list(_frobcrit.validate(_dump(embedding)))


def restrict(embedding, weight):
    return _json.loads(_frobcrit.restrict(_dump(embedding), _weight(weight)))


def branch(embedding, weight):
    """Decomposition into irreducible H-characters: list of rows."""
    return _json.loads(_frobcrit.branch(_dump(embedding), _weight(weight)))


def character(spec, weight):
    return _json.loads(_frobcrit.character(spec, _weight(weight)))


def weyl_order(spec):
    return _frobcrit.weyl_order(spec)


def num_positive_roots(spec):
    return _frobcrit.num_positive_roots(spec)


def conjugated_borel_check(embedding, word, J):
    return _json.loads(_frobcrit.conjugated_borel_check(_dump(embedding), list(word), list(J)))


def verify_identities(max_rank=4):
    return _json.loads(_frobcrit.verify_identities(max_rank))


def run_cli(args, stdin=""):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    return _frobcrit.run_cli(list(args), stdin)
