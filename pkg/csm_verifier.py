#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Verify c_SM(1_U) = c(Der(-log D)) ∩ [X] for free divisors, hyperplane arrangements first.

Subcommands: verify, freeness, linear-type, charpoly, proof-chain, batch.
Exit codes: 0 verified/true, 1 false, 2 inconclusive, 3 input error.
"""

import argparse
import json
import logging
import sys

from configuration_management import default_config, reload_config, validate_configuration
from constants import EXIT_INPUT_ERROR, SUBCOMMAND_KINDS
from job_runner import batch_verify, run_job
from verifier import JobSpec, JobSpecError, format_report, load_job_spec

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', help='job file (JSON or YAML) or bare arrangement file; a folder for batch')
    common.add_argument('--out', help='report file; a folder for batch')
    common.add_argument('--degree-bound', type=int, default=None, help='highest derivation degree searched')
    common.add_argument('--step-cap', type=int, default=None, help='maximal Groebner reduction steps')
    common.add_argument('--format', choices=('json', 'text'), default=None)
    common.add_argument('--config', default=None, help='configuration JSON file')
    common.add_argument('--loglevel', type=lambda x: getattr(logging, x.upper()), default=False)

    subparsers = parser.add_subparsers(dest='command', required=True)
    for command in ('verify', 'freeness', 'charpoly'):
        sub = subparsers.add_parser(command, parents=[common])
        if command != 'charpoly':
            sub.add_argument('--polynomial', help='divisor equation instead of an arrangement file')
            sub.add_argument('--variables', help='comma separated variable names')
    sub = subparsers.add_parser('linear-type', parents=[common])
    sub.add_argument('--polynomial', help='use the Jacobian ideal of this polynomial')
    sub.add_argument('--generators', help='semicolon separated ideal generators')
    sub.add_argument('--variables', help='comma separated variable names')
    sub = subparsers.add_parser('proof-chain', parents=[common])
    sub.add_argument('--rank', type=int, default=None, help='rank n of the formal bundles')
    sub = subparsers.add_parser('batch', parents=[common])
    sub.add_argument('--workers', type=int, default=None, help='parallel worker processes')
    return parser


def spec_from_args(args):
    """JobSpec from --input, or from the inline --polynomial/--generators/--rank flags."""
    kind = SUBCOMMAND_KINDS[args.command]
    if args.input:
        spec = load_job_spec(args.input, default_kind=kind)
        if spec.kind != kind:
            raise JobSpecError(f"{args.input} is a {spec.kind} job, not {kind}")
        return spec
    payload = {}
    if getattr(args, 'variables', None):
        payload['variables'] = [v.strip() for v in args.variables.split(',') if v.strip()]
    if getattr(args, 'generators', None):
        payload['generators'] = [g.strip() for g in args.generators.split(';') if g.strip()]
    elif getattr(args, 'polynomial', None):
        payload['polynomial'] = args.polynomial
    elif getattr(args, 'rank', None) is not None:
        payload['n'] = args.rank
    else:
        raise JobSpecError(f"'{args.command}' needs --input or an inline payload flag")
    return JobSpec.from_dict(dict(payload, kind=kind), source='command line')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    config = default_config()
    if args.config and not reload_config(config, args.config):
        print(f"Cannot read configuration {args.config}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.loglevel:
        LOGLEVEL = args.loglevel
    else:
        LOGLEVEL = str(config['LOGGING'].get('LOGLEVEL', 'INFO')).upper()
    logging.basicConfig(level=LOGLEVEL)

    config_errors = validate_configuration(config)
    if config_errors:
        for error in config_errors:
            logger.error(error)
        return EXIT_INPUT_ERROR

    overrides = {'degree_bound': args.degree_bound, 'step_cap': args.step_cap, 'format': args.format}
    fmt = args.format or config['REPORT'].get('FORMAT', 'json')

    if args.command == 'batch':
        if not args.input:
            parser.error('batch needs --input DIRECTORY')
        summary = batch_verify(args.input, args.out, config, overrides, args.workers)
        print(format_report(summary, fmt, config['REPORT'].get('TEMPLATE_FOLDER'), 'batch_summary.jinja2'), end='')
        return summary['exit_code']

    try:
        spec = spec_from_args(args)
    except (JobSpecError, ValueError) as e:
        logger.error(str(e))
        report = {'kind': SUBCOMMAND_KINDS[args.command], 'case': args.input or '', 'error': str(e),
                  'exit_code': EXIT_INPUT_ERROR}
        print(json.dumps(report, indent=2) if fmt == 'json' else f"error: {e}")
        return EXIT_INPUT_ERROR

    report, code = run_job(spec, args.out, config, overrides)
    if not args.out:
        print(format_report(report, fmt, config['REPORT'].get('TEMPLATE_FOLDER')), end='')
    return code


if __name__ == "__main__":
    sys.exit(main())
