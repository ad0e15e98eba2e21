"""Squared-norm certificates for positive bihomogeneous polynomials.

Polynomials, domains and certificates are plain dicts in the JSON schemas
used by the ``hermsos`` command-line tool.
"""

import json

from . import _core
from ._core import HermsosError, InputError, enumerate_basis

__all__ = [
    "HermsosError",
    "InputError",
    "enumerate_basis",
    "evaluate",
    "stabilize",
    "decompose",
    "verify",
    "gram",
    "phi_squared_norm",
    "mc_inner_product",
    "sphere_min",
    "poly",
]


def _dump(obj):
    return None if obj is None else json.dumps(obj)


def poly(n, m, terms):
    """Build a polynomial dict from (mu, nu, coefficient) triples.

    Coefficients may be ints, strings such as "3/2", or complex numbers whose
    parts are exact in binary.
    """
    out = []
    for mu, nu, c in terms:
        if isinstance(c, complex):
            re, im = c.real, c.imag
        else:
            re, im = c, 0
        out.append({"mu": list(mu), "nu": list(nu), "re": str(re), "im": str(im)})
    return {"n": n, "m": m, "terms": out}


def evaluate(f, z):
    return _core.evaluate(_dump(f), list(z))


def stabilize(f, domain=None, d_max=50, strict=False, tower="exact", jobs=1):
    """Return the search record; ``record["d0"]`` is the first certified degree."""
    return json.loads(_core.stabilize(_dump(f), _dump(domain), d_max, strict, tower, jobs))


def decompose(f, strict=False, tower="exact"):
    return json.loads(_core.decompose(_dump(f), strict, tower))


def verify(certificate, f, domain=None):
    return _core.verify(_dump(certificate), _dump(f), _dump(domain))


def gram(domain, d, tower="exact"):
    return json.loads(_core.gram(_dump(domain), d, tower))


def phi_squared_norm(domain, d):
    return json.loads(_core.phi_squared_norm(_dump(domain), d))


def mc_inner_product(domain, p, q, samples=100000, seed=1, jobs=1):
    """(estimate, standard error) of the unnormalized inner product <p, q>."""
    return _core.mc_inner_product(_dump(domain), _dump(p), _dump(q), samples, seed, jobs)


def sphere_min(f, samples=2048, refinements=60):
    return _core.sphere_min(_dump(f), samples, refinements)
