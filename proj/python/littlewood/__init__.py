"""Exact-arithmetic certificates for the nearly-principles of real analysis.

Thin wrapper over the C++ core. Rationals cross the boundary as exact "p/q"
strings; certificates and reports come back as plain dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    Function,
    IntervalSet,
    LittlewoodError,
    __version__,
    demo,
)
from . import _core


def decompose(interval_set, epsilon):
    return _json.loads(_core.decompose(interval_set, epsilon))


def fourth_principle(f, epsilon, cap=200000):
    return _json.loads(_core.fourth_principle(f, epsilon, cap))


def lusin(f, epsilon, accuracy=8, classical=False):
    return _json.loads(_core.lusin(f, epsilon, accuracy, classical))


def egoroff(family, universe, epsilon, ladder=4, path="classical"):
    return _json.loads(_core.egoroff(family, universe, epsilon, ladder, path))


def dini_index(family, universe, k, epsilon, algorithm="sup"):
    return _json.loads(_core.dini_index(family, universe, k, epsilon, algorithm))


def run_scenario(scenario, verify=False, epsilon="", depth=0, grid_density=""):
    if isinstance(scenario, dict):
        scenario = _json.dumps(scenario)
    return _json.loads(_core.run_scenario(scenario, verify, epsilon, depth, grid_density))


def verify_scenario(scenario, cert_document, depth=0, grid_density=""):
    if isinstance(scenario, dict):
        scenario = _json.dumps(scenario)
    if isinstance(cert_document, dict):
        cert_document = _json.dumps(cert_document)
    return _json.loads(_core.verify_scenario(scenario, cert_document, depth, grid_density))
