"""Betti cones over hypersurface rings of embedding dimension at most two.

Values cross the extension boundary as JSON; this layer converts them to and
from plain dicts. Rationals are strings such as "-3/2".
"""

import json

from . import _core
from ._core import (
    BettiError,
    FamilyMismatch,
    InvalidArgument,
    NotInCone,
    ParseError,
    TailInconsistency,
)

__all__ = [
    "BettiError",
    "FamilyMismatch",
    "InvalidArgument",
    "NotInCone",
    "ParseError",
    "TailInconsistency",
    "quadric",
    "embdim1",
    "sequence",
    "pure_diagram",
    "membership",
    "decompose",
    "hilbert_function",
    "multiplicity_bounds",
    "verify_fan",
    "minimal_betti",
    "examples",
]


def quadric(a=1, b=0, c=0):
    """Q[x,y]/<a x^2 + b xy + c y^2>."""
    return {"family": "quadric", "q": [str(a), str(b), str(c)]}


def embdim1(n):
    """Q[x]/<x^n>."""
    return {"family": "embdim1", "n": n}


def sequence(d0, d1=None, infinite=False):
    """(d0, inf, ...), (d0, d1, inf, ...) or, with infinite=True, the periodic sequence."""
    if d1 is None:
        return {"kind": "pd0", "d0": d0}
    return {"kind": "inf" if infinite else "pd1", "d0": d0, "d1": d1}


def _call(fn, *args):
    return json.loads(fn(*(json.dumps(a) if isinstance(a, (dict, list)) else a for a in args)))


def pure_diagram(ring, d):
    return _call(_core.pure_diagram, ring, d)


def membership(diagram):
    return _call(_core.membership, diagram)


def decompose(diagram):
    return _call(_core.decompose, diagram)


def hilbert_function(diagram, k):
    return _call(_core.hilbert_function, diagram, k)


def multiplicity_bounds(diagram):
    return _call(_core.multiplicity_bounds, diagram)


def verify_fan(ring, m, check_intersections=True):
    return _call(_core.verify_fan, ring, m, check_intersections)


def minimal_betti(presentation, steps, slack=0):
    return _call(_core.minimal_betti, presentation, steps, slack)


def examples():
    """(name, expected, actual) for every stored worked example."""
    return _core.examples()
