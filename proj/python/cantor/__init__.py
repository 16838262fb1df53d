"""Exact anti-list constructions over binary sequences, base-b reals, and
finite powerset models, with step traces and a brute-force verifier.

Everything is exact: values are arbitrary-precision fractions and digit
words, never floats.
"""

from ._core import (
    BitStream,
    DigitStream,
    DigitWord,
    Failure,
    InvalidInput,
    MutationOutcome,
    PowersetInstance,
    Rational,
    TraceStep,
    VerificationReport,
    anti_diagonal,
    classical_diagonal,
    d_infinity,
    d_n,
    expansion,
    greedy_chain,
    hanf_h,
    in_range,
    inductive_b,
    inductive_real,
    inductive_sigma,
    mutation_self_test,
    pair_s,
    pair_sigma,
    partial_sum,
    stages,
    verify_instance,
    verify_powerset,
    verify_sequences,
)

__all__ = [
    "BitStream",
    "DigitStream",
    "DigitWord",
    "Failure",
    "InvalidInput",
    "MutationOutcome",
    "PowersetInstance",
    "Rational",
    "TraceStep",
    "VerificationReport",
    "anti_diagonal",
    "classical_diagonal",
    "d_infinity",
    "d_n",
    "expansion",
    "fraction",
    "greedy_chain",
    "hanf_h",
    "in_range",
    "inductive_b",
    "inductive_real",
    "inductive_sigma",
    "mutation_self_test",
    "pair_s",
    "pair_sigma",
    "partial_sum",
    "stages",
    "verify_instance",
    "verify_powerset",
    "verify_sequences",
]

__version__ = "0.1.0"


def fraction(r):
    """The exact value of a Rational as a fractions.Fraction."""
    from fractions import Fraction

    return Fraction(r.num, r.den)
