"""Exact q-deformed Euclidean calculus.

Polynomials travel as JSON documents in the library's canonical encoding.
The helpers here decode them into plain Python objects; the raw strings
are available through the ``_qeuclid`` extension module.
"""

import json

from . import _qeuclid
from ._qeuclid import ParseError, heine_diagnostic, parse, propagator

__all__ = [
    "ParseError",
    "conjugate",
    "convert_convention",
    "derivative",
    "evaluate",
    "exponential",
    "gaussian_expectations",
    "heine_diagnostic",
    "normal_order",
    "parse",
    "parse_tree",
    "plane_wave",
    "propagator",
    "psq_power",
    "q_number",
    "star_product",
    "star_product_oracle",
    "verify",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def parse_tree(source):
    return json.loads(_qeuclid.parse_tree(source))


def evaluate(source, convention="W"):
    return json.loads(_qeuclid.evaluate(source, convention))


def star_product(f, g):
    return json.loads(_qeuclid.star_product(_dump(f), _dump(g)))


def star_product_oracle(f, g):
    return json.loads(_qeuclid.star_product_oracle(_dump(f), _dump(g)))


def normal_order(f, convention):
    return json.loads(_qeuclid.normal_order(_dump(f), convention))


def convert_convention(f, convention):
    return json.loads(_qeuclid.convert_convention(_dump(f), convention))


def conjugate(f):
    return json.loads(_qeuclid.conjugate(_dump(f)))


def derivative(f, index, hat=False, upper=False):
    return json.loads(_qeuclid.derivative(_dump(f), index, hat, upper))


def exponential(variant, order):
    return json.loads(_qeuclid.exponential(variant, order))


def plane_wave(family, N, K, mass="1"):
    return json.loads(_qeuclid.plane_wave(family, N, K, mass))


def psq_power(k):
    return json.loads(_qeuclid.psq_power(k))


def q_number(n, base=1):
    return json.loads(_qeuclid.q_number(n, base))


def verify(suite, q="11/10", N=3, K=3, seed=1, cases=0):
    """Run a property suite and return its report as a dict."""
    return json.loads(_qeuclid.verify(suite, q, N, K, seed, cases))


def gaussian_expectations(q0, half_width, mass, center, width, wave_vector, support, t=0.0):
    """Expectation values of a Gaussian momentum packet on a q-lattice."""
    return _qeuclid.gaussian_expectations(q0, half_width, mass, center, width, wave_vector, support, t)
