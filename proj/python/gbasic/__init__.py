"""Exact-arithmetic tools for graded modules over polynomial rings.

Dict-friendly wrappers over the compiled `_core` module.  Point sets may be
given as a parsed JSON payload ({"points": [[...], ...]}) or as a plain list
of coordinate lists; coordinates may be ints or strings like "1/2".
"""

import json as _json

from . import _core

GbasicError = _core.GbasicError
HypothesisError = _core.HypothesisError

__all__ = [
    "GbasicError",
    "HypothesisError",
    "monomials",
    "hilbert_function",
    "ideal_basis",
    "betti_table",
    "satisfies_cb",
    "cb_index",
    "verify_bounds",
    "mu",
    "fitting_vanishes",
    "width",
    "shrink_once",
    "basic_elements",
    "serre_section",
    "grid_points",
    "random_points",
    "simplex_points",
]


def _points_payload(points):
    if isinstance(points, dict):
        payload = points
    else:
        payload = {"points": [[str(c) for c in p] for p in points]}
    return _json.dumps(payload)


def _module_payload(module):
    return _json.dumps(module)


def _sections_payload(sections):
    if isinstance(sections, dict):
        payload = sections
    else:
        payload = {"sections": list(sections)}
    return _json.dumps(payload)


def monomials(num_vars, degree):
    return _core.monomials(num_vars, degree)


def hilbert_function(points, degree, field="Q", prime=0):
    return _core.hilbert_function(_points_payload(points), degree, field, prime)


def ideal_basis(points, degree, field="Q", prime=0):
    return _core.ideal_basis(_points_payload(points), degree, field, prime)


def betti_table(points, field="Q", prime=0, threads=1):
    return _json.loads(_core.betti_table(_points_payload(points), field, prime, threads))


def satisfies_cb(points, degree, field="Q", prime=0, threads=1):
    return _core.satisfies_cb(_points_payload(points), degree, field, prime, threads)


def cb_index(points, field="Q", prime=0, threads=1):
    return _core.cb_index(_points_payload(points), field, prime, threads)


def verify_bounds(points, field="Q", prime=0, threads=1):
    return _json.loads(_core.verify_bounds(_points_payload(points), field, prime, threads))


def mu(module, points, field="Q", prime=0):
    return _core.mu(_module_payload(module), _points_payload(points), field, prime)


def fitting_vanishes(module, index, points, field="Q", prime=0):
    return _core.fitting_vanishes(
        _module_payload(module), index, _points_payload(points), field, prime
    )


def width(module, sections, points, field="Q", prime=0):
    return _core.width(
        _module_payload(module),
        _sections_payload(sections),
        _points_payload(points),
        field,
        prime,
    )


def shrink_once(module, sections, points, weights, field="Q", prime=0):
    return _json.loads(
        _core.shrink_once(
            _module_payload(module),
            _sections_payload(sections),
            _points_payload(points),
            list(weights),
            field,
            prime,
        )
    )


def basic_elements(module, sections, points, weights, keep, field="Q", prime=0):
    return _json.loads(
        _core.basic_elements(
            _module_payload(module),
            _sections_payload(sections),
            _points_payload(points),
            list(weights),
            keep,
            field,
            prime,
        )
    )


def serre_section(module, sections, points, field="Q", prime=0):
    return _json.loads(
        _core.serre_section(
            _module_payload(module),
            _sections_payload(sections),
            _points_payload(points),
            field,
            prime,
        )
    )


def grid_points(a, b, field="Q", prime=0):
    return _json.loads(_core.grid_points(a, b, field, prime))


def random_points(n, seed, field="Q", prime=0):
    return _json.loads(_core.random_points(n, seed, field, prime))


def simplex_points(field="Q", prime=0):
    return _json.loads(_core.simplex_points(field, prime))
