"""Instanton Floer chain complexes of lens spaces L(p, q), p odd."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConsistencyError,
    DomainError,
    IoError,
    character_dim_oracle,
    delta,
    dirac_count,
    dirac_count_oracle,
    fixed_dim,
    grading_kpair,
    i_theta_parity,
    is_prime,
    mod_inverse,
    relative_dim_mod8,
    run_cli,
    signature_mod16_check,
    spectral_flow_affine,
    theta_row_maps,
    two_squares,
)

__all__ = [
    "ConsistencyError",
    "DomainError",
    "IoError",
    "assemble_complex",
    "boundary_element",
    "casson_walker_sum",
    "character_dim_oracle",
    "count_lattice",
    "delta",
    "dirac_count",
    "dirac_count_oracle",
    "fixed_dim",
    "grading_kpair",
    "i_theta_parity",
    "is_prime",
    "mod_inverse",
    "obstruction_report",
    "relative_dim_mod8",
    "run_cli",
    "sawtooth",
    "signature_closed_form",
    "signature_mod16_check",
    "spectral_flow_affine",
    "theta_row_maps",
    "two_squares",
    "vanishing_certificate",
]


def _fraction(text):
    return Fraction(text)


def sawtooth(x):
    """((x)) for a Fraction or int."""
    x = Fraction(x)
    return _fraction(_core.sawtooth(f"{x.numerator}/{x.denominator}"))


def casson_walker_sum(p, q):
    return _fraction(_core.casson_walker_sum(p, q))


def signature_closed_form(p):
    return int(_core.signature_closed_form(p))


def count_lattice(k1, k2, p, q):
    return json.loads(_core.count_lattice(k1, k2, p, q))


def boundary_element(l, m, p, q):
    return json.loads(_core.boundary_element(l, m, p, q))


def assemble_complex(p, q):
    """Gradings, generators, boundary bit rows and homology as a dict."""
    return json.loads(_core.assemble_complex(p, q))


def vanishing_certificate(p, i_theta_even, q=2):
    return json.loads(_core.vanishing_certificate(p, q, i_theta_even))


def obstruction_report(p):
    return json.loads(_core.obstruction_report(p))
