"""Exact determinantal models of plane curves.

Thin dict-level wrappers around the compiled core; every structured value
crosses the extension boundary as a JSON string, so coefficients stay
bit-exact rationals.
"""

import json

from . import _core

ParseError = _core.ParseError
DomainError = _core.DomainError


def hilbert(degree):
    return json.loads(_core.hilbert(degree))


def dims(degree):
    return json.loads(_core.dims(degree))


def stability(degree, s, h0Q):
    return _core.stability(degree, s, h0Q)


def det(matrix):
    return json.loads(_core.det(json.dumps(matrix)))


def nu(matrix):
    return json.loads(_core.nu(json.dumps(matrix)))


def is_singular(matrix):
    return _core.is_singular(json.dumps(matrix))


def section(curve, point):
    return json.loads(_core.section(json.dumps(curve), json.dumps(point)))


def act(group, matrix):
    return json.loads(_core.act(json.dumps(group), json.dumps(matrix)))


def same_fiber(m1, m2):
    out = _core.same_fiber(json.dumps(m1), json.dumps(m2))
    return None if out is None else json.loads(out)


def normalize(matrix):
    return json.loads(_core.normalize(json.dumps(matrix)))


def tangent_contains(matrix, vector):
    return _core.tangent_contains(json.dumps(matrix), json.dumps(vector))


def phi(matrix, vector):
    return json.loads(_core.phi(json.dumps(matrix), json.dumps(vector)))


def is_r_bundle(matrix, vector):
    return _core.is_r_bundle(json.dumps(matrix), json.dumps(vector))


def r_bundle_equivalent(matrix, v1, v2):
    out = _core.r_bundle_equivalent(json.dumps(matrix), json.dumps(v1), json.dumps(v2))
    return None if out is None else json.loads(out)


def run_suite(name, degree=3, seed=0, trials=100):
    return json.loads(_core.run_suite(name, degree, seed, trials))


def suite_names():
    return list(_core.suite_names())


def random_instances(kind, degree, seed, n):
    return json.loads(_core.random_instances(kind, degree, seed, n))
