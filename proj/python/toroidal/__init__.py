"""Exact checks for twisted full toroidal Lie algebras and their bounded modules."""

import json
from dataclasses import dataclass

from . import _toroidal
from ._toroidal import ConfigError, WindowError

__all__ = [
    "ConfigError",
    "RunResult",
    "WindowError",
    "character",
    "check_jacobi",
    "decompose",
    "verify_algebra",
    "verify_modules",
]


@dataclass
class RunResult:
    exit_code: int
    summary: dict
    files: dict

    @property
    def ok(self):
        return self.exit_code == 0

    def report(self, name):
        """Decoded JSON file from the run, e.g. report("modules_report.json")."""
        return json.loads(self.files[name])


def _wrap(raw):
    return RunResult(raw["exit_code"], json.loads(raw["summary"]), dict(raw["files"]))


def verify_algebra(config, seed=None, window="", cocycle=""):
    return _wrap(_toroidal.verify_algebra(str(config), seed, window, cocycle))


def verify_modules(config, seed=None, window="", cocycle=""):
    return _wrap(_toroidal.verify_modules(str(config), seed, window, cocycle))


def character(config, seed=None, window="", cocycle=""):
    return _wrap(_toroidal.character(str(config), seed, window, cocycle))


def check_jacobi(config, seed=None, window="", cocycle=""):
    return _wrap(_toroidal.check_jacobi(str(config), seed, window, cocycle))


def decompose(config, kind="", seed=None, window=""):
    return _wrap(_toroidal.decompose(str(config), kind, seed, window))
