"""Exact computations with finite-dimensional Hopf algebras given by structure constants."""

import json

from ._core import ConfigError, Hopf, HopfError, command_names
from ._core import run_command as _run_command

__all__ = ["ConfigError", "Hopf", "HopfError", "command_names", "run", "export"]


def run(command, algebra, field="p=5,root=4", braided=False, sample=0, seed=1):
    """Run a command-line subcommand and return (ok, report dict)."""
    ok, doc = _run_command(command, algebra, field, braided, sample, seed)
    return ok, json.loads(doc)


def export(algebra, field="p=5,root=4", braided=False):
    """Structure constants of the named algebra as a dict."""
    return run("export", algebra, field, braided)[1]
