#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Shared constants for the CSM verifier.

This module contains constants that are used across multiple modules,
particularly the polynomial grammar tokens and the exit-code contract
that CI jobs rely on.
"""

# Token pattern for the polynomial text grammar
# Matches, after optional whitespace, exactly one of:
#   (\d+)                     - an unsigned integer literal
#   ([A-Za-z_][A-Za-z0-9_]*)  - a variable token
#   ([-+*^/()])               - an operator or parenthesis
#
# '/' is only accepted between two integer literals (rational literal "3/4"),
# so every canonical output of format_polynomial parses back.
#
# Used by:
#   - polynomials.py  (tokenize / parse_polynomial)
#
POLYNOMIAL_TOKEN_PATTERN = r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^/()]))'

# Rational literal accepted in arrangement files: "3", "-2", "1/2", " -7/3 "
RATIONAL_PATTERN = r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$'

# Exit codes of run_job / batch_verify (bit-exact contract for CI)
EXIT_VERIFIED = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3

# Job kinds understood by the jobs plugin package
JOB_KINDS = ('verify-arrangement', 'freeness', 'linear-type', 'char-poly', 'proof-chain')

# CLI subcommand -> job kind
SUBCOMMAND_KINDS = {
    'verify': 'verify-arrangement',
    'freeness': 'freeness',
    'linear-type': 'linear-type',
    'charpoly': 'char-poly',
    'proof-chain': 'proof-chain',
}

# Default reduction budget for every Groebner computation
DEFAULT_STEP_CAP = 1_000_000

# Prefix used for presentation variables of Sym / Rees ideals (T1, T2, ...)
PRESENTATION_PREFIX = 'T'

# Name of the auxiliary Rees variable
REES_VARIABLE = 't'
