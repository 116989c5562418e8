"""Exact Kaneyama data for torus-equivariant principal GL(r)/SL(r) bundles on toric varieties.

Fans, data and reports are plain dicts following the CLI's JSON layout. Matrix entries may be
given as ints, Fractions, "p/q" strings or [num, den] pairs; results use [num, den] pairs.
"""

import json
from fractions import Fraction

from . import _toricbundle as _core
from ._toricbundle import DimensionMismatch, InputError, SingularMatrix, ValidationError

__all__ = [
    "DimensionMismatch",
    "InputError",
    "SingularMatrix",
    "ValidationError",
    "aut_lie_algebra",
    "extend_structure_group",
    "fraction_matrix",
    "is_equivariant_automorphism",
    "kleinschmidt",
    "levi_reduction_check",
    "projective_space",
    "run_cli",
    "split_check",
    "split_data",
    "tangent_frame_data",
    "validate_data",
    "validate_fan",
]


def _encode(obj):
    def default(x):
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        raise TypeError(f"cannot encode {type(x).__name__}")

    return obj if isinstance(obj, str) else json.dumps(obj, default=default)


def fraction_matrix(rows):
    """[[num, den], ...] rows as Fractions."""
    return [[Fraction(int(e[0]), int(e[1])) for e in row] for row in rows]


def projective_space(n):
    return json.loads(_core.projective_space(n))


def kleinschmidt(s, a):
    return json.loads(_core.kleinschmidt(s, list(a)))


def validate_fan(fan):
    return json.loads(_core.validate_fan(_encode(fan)))


def validate_data(data):
    return json.loads(_core.validate_data(_encode(data)))


def tangent_frame_data(fan):
    return json.loads(_core.tangent_frame_data(_encode(fan)))


def split_data(fan, m, kind="GL", rank=None):
    """m lists one integer weight vector per ray."""
    rank = len(m[0]) if rank is None else rank
    spec = {"group": {"kind": kind, "rank": rank}, "m": m}
    return json.loads(_core.split_data(_encode(fan), _encode(spec)))


def extend_structure_group(data, embedding):
    return json.loads(_core.extend_structure_group(_encode(data), embedding))


def aut_lie_algebra(data, base=0):
    return json.loads(_core.aut_lie_algebra(_encode(data), base))


def is_equivariant_automorphism(data, matrix, base=0):
    return _core.is_equivariant_automorphism(_encode(data), _encode(matrix), base)


def levi_reduction_check(data, partition, base=0):
    return _core.levi_reduction_check(_encode(data), _encode(partition), base)


def split_check(data, base=0, seed=0, attempts=32):
    return json.loads(_core.split_check(_encode(data), base, seed, attempts))


def run_cli(*args):
    """Runs a CLI subcommand in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
