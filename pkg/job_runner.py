#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Runs job files through the jobs plugin package and maps outcomes to exit codes.

Every exception is caught at the job boundary: input problems become exit 3
with an "error" field, exhausted Groebner budgets become exit 2. A batch never
stops on a failing file; its exit code is the maximum over its jobs.
"""

import logging
import os
from multiprocessing import Pool

from configuration_management import job_options
from constants import EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR, EXIT_VERIFIED
from groebner import ResourceLimitExceeded
from jobs import JobBase
from verifier import JobSpec, JobSpecError, format_report, load_job_spec, write_report

logger = logging.getLogger(__name__)

JOB_FILE_EXTENSIONS = ('.json', '.yaml', '.yml')


def run_job(spec, out=None, config=None, overrides=None, default_kind=None):
    """
    Run a single job.

    Args:
        spec: JobSpec, or path of a JSON/YAML job file
        out: Optional report path; written in the configured format
        config: Configuration dictionary (defaults when None)
        overrides: Options from command line flags, taking precedence over the job file
        default_kind: Kind given to a bare arrangement file

    Returns:
        tuple: (report dict, exit code)
    """
    source = spec if isinstance(spec, str) else getattr(spec, 'source', '')
    options = job_options(config or {}, None, overrides)
    try:
        if not isinstance(spec, JobSpec):
            spec = load_job_spec(spec, default_kind)
        options = job_options(config or {}, spec.options, overrides)
        report, code = JobBase.process_with_plugins(spec, options)
    except ResourceLimitExceeded as e:
        logger.warning(f"{source or 'job'}: {e}")
        report, code = _failure_report(spec, source, str(e)), EXIT_INCONCLUSIVE
    except (JobSpecError, ValueError) as e:
        logger.error(f"{source or 'job'}: {e}")
        report, code = _failure_report(spec, source, str(e)), EXIT_INPUT_ERROR
    except (TypeError, KeyError) as e:
        logger.error(f"{source or 'job'}: malformed input: {e!r}")
        report, code = _failure_report(spec, source, str(e)), EXIT_INPUT_ERROR
    report['exit_code'] = code
    if out:
        write_report(report, out, options.get('format', 'json'), options.get('template_folder'))
    return report, code


def _failure_report(spec, source, message):
    if isinstance(spec, JobSpec):
        return {'kind': spec.kind, 'case': spec.case, 'error': message}
    case = os.path.splitext(os.path.basename(source))[0] if source else ''
    return {'kind': None, 'case': case, 'error': message}


def list_job_files(directory):
    return sorted(name for name in os.listdir(directory)
                  if not name.startswith('.') and name.endswith(JOB_FILE_EXTENSIONS))


def _report_path(out_dir, filename):
    if not out_dir:
        return None
    return os.path.join(out_dir, os.path.splitext(filename)[0] + '.report.json')


def _run_one(path, out, config, overrides):
    report, code = run_job(path, out, config, overrides)
    return os.path.basename(path), report, code


def summary_row(filename, report, code):
    row = {'file': filename, 'case': report.get('case'), 'kind': report.get('kind'), 'exit_code': code}
    for key in ('lhs_text', 'rhs_text', 'equal', 'error'):
        if report.get(key) is not None:
            row[key] = report[key]
    hypotheses = report.get('hypotheses') or {}
    if hypotheses:
        row['free'] = hypotheses.get('free', {}).get('status')
        row['linear_type'] = hypotheses.get('linear_type', {}).get('status')
    return row


def batch_verify(directory, out_dir=None, config=None, overrides=None, workers=None):
    """
    Run every job file of ``directory`` in filename order.

    Args:
        directory: Folder of JSON/YAML job files
        out_dir: Optional folder for per-file reports and the summary
        config: Configuration dictionary
        overrides: Options from command line flags
        workers: Process count; defaults to BATCH.WORKERS

    Returns:
        dict: {'jobs': [summary rows], 'exit_code': max exit code}
    """
    options = job_options(config or {}, None, overrides)
    workers = workers or options.get('workers') or 1
    filenames = list_job_files(directory)
    arguments = [(os.path.join(directory, name), _report_path(out_dir, name), config, overrides)
                 for name in filenames]
    logger.info(f"Running {len(arguments)} job files from {directory} with {workers} worker(s)")
    if workers > 1 and len(arguments) > 1:
        with Pool(processes=workers) as pool:
            results = pool.starmap(_run_one, arguments)
    else:
        results = [_run_one(*args) for args in arguments]
    rows = [summary_row(name, report, code) for name, report, code in results]
    summary = {'directory': directory, 'jobs': rows,
               'exit_code': max((row['exit_code'] for row in rows), default=EXIT_VERIFIED)}
    if out_dir:
        write_report(summary, os.path.join(out_dir, 'summary.json'), 'json')
        with open(os.path.join(out_dir, 'summary.txt'), 'w', encoding='utf-8') as f:
            f.write(format_report(summary, 'text', options.get('template_folder'), 'batch_summary.jinja2'))
    return summary
