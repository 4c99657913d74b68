#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
End-to-end verification of c_SM(1_U) = c(Der(-log D)) ∩ [Pⁿ] for hyperplane arrangements.

The left side comes from the intersection lattice (Möbius inversion over flats),
the right side from a Saito basis of the logarithmic derivations of the defining
polynomial. Both hypotheses of the identity, freeness and linear type of the
Jacobian ideal, are checked and reported; they are advisory, so both sides are
computed whenever possible.
"""

import json
import logging
import os
import re
import time
from dataclasses import dataclass, field

import yaml
from jinja2 import Environment, FileSystemLoader

from arrangements import Arrangement, build_lattice, csm_complement, euler_characteristic_complement
from chow import ChowClass, dual_form_check, shadow_check
from configuration_management import validate_job_options
from constants import DEFAULT_STEP_CAP, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR, EXIT_VERIFIED, JOB_KINDS
from groebner import ResourceLimitExceeded, StepBudget, is_linear_type, jacobian_generators
from logder import FreenessVerdict, chern_log_sheaf, find_free_basis
from polynomials import default_variables, parse_polynomial

logger = logging.getLogger(__name__)

IDENTIFIER_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')

VIEWS_FOLDER = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'views')


class JobSpecError(ValueError):
    """A job file is unreadable or its payload does not match its kind."""


def read_structured_file(path):
    """
    Deserialize a job file that may contain either JSON or YAML content.

    Parameters:
        path (str): Path to the file.

    Returns:
        data: Deserialized data structure.
    """
    try:
        with open(path, 'r', encoding='utf-8') as file:
            try:
                return json.load(file)
            except json.JSONDecodeError:
                file.seek(0)
                return yaml.safe_load(file)
    except yaml.YAMLError as e:
        raise JobSpecError(f"{path} is neither JSON nor YAML: {e}") from e
    except OSError as e:
        raise JobSpecError(f"Cannot read {path}: {e}") from e


def _is_identifier_list(value):
    return isinstance(value, list) and all(isinstance(v, str) and IDENTIFIER_PATTERN.fullmatch(v) for v in value)


def _required_payload(kind):
    return {
        'verify-arrangement': ('arrangement', 'polynomial'),
        'freeness': ('arrangement', 'polynomial'),
        'linear-type': ('polynomial', 'generators'),
        'char-poly': ('arrangement',),
        'proof-chain': ('n',),
    }[kind]


@dataclass
class JobSpec:
    kind: str
    payload: dict
    options: dict = field(default_factory=dict)
    source: str = ''

    @classmethod
    def from_dict(cls, data, source='', default_kind=None):
        """Validate a parsed job file; a bare arrangement object is wrapped with ``default_kind``."""
        if not isinstance(data, dict):
            raise JobSpecError(f"{source or 'job'}: a job must be a mapping")
        data = dict(data)
        if 'kind' not in data and 'hyperplanes' in data and default_kind:
            data = {'kind': default_kind, 'arrangement': data}
        kind = data.pop('kind', default_kind)
        if kind not in JOB_KINDS:
            raise JobSpecError(f"{source or 'job'}: unknown job kind {kind!r}; expected one of {', '.join(JOB_KINDS)}")
        options = data.pop('options', None) or {}
        if not isinstance(options, dict):
            raise JobSpecError(f"{source or 'job'}: 'options' must be a mapping")
        errors = validate_job_options(options)
        if errors:
            raise JobSpecError(f"{source or 'job'}: invalid options: {' '.join(errors)}")
        variables = data.get('variables')
        if variables is not None and not _is_identifier_list(variables):
            raise JobSpecError(f"{source or 'job'}: 'variables' must be a list of identifiers, got {variables!r}")
        if not isinstance(data.get('name', ''), str):
            raise JobSpecError(f"{source or 'job'}: 'name' must be a string")
        if not any(key in data for key in _required_payload(kind)):
            raise JobSpecError(f"{source or 'job'}: a {kind} job needs one of "
                               f"{', '.join(repr(k) for k in _required_payload(kind))}")
        return cls(kind, data, options, source)

    def to_dict(self):
        return {'kind': self.kind, **self.payload, 'options': dict(self.options)}

    @property
    def case(self):
        name = self.payload.get('name')
        if not name and isinstance(self.payload.get('arrangement'), dict):
            name = self.payload['arrangement'].get('name')
        if not name and self.source:
            name = os.path.splitext(os.path.basename(self.source))[0]
        return name or self.kind

    def arrangement(self):
        return Arrangement.from_dict(self.payload['arrangement'], name=self.case)

    def variables(self, texts=()):
        """Declared variables, or the identifiers of ``texts`` (x, y, z, w first)."""
        declared = self.payload.get('variables')
        if declared:
            return tuple(declared)
        return infer_variables(texts)

    def polynomial(self):
        text = self.payload['polynomial']
        if not isinstance(text, str):
            raise JobSpecError("'polynomial' must be a string")
        return parse_polynomial(text, self.variables([text]))

    def generators(self):
        texts = self.payload['generators']
        if not isinstance(texts, list) or not texts or not all(isinstance(t, str) for t in texts):
            raise JobSpecError("'generators' must be a non-empty list of polynomial strings")
        varnames = self.variables(texts)
        return [parse_polynomial(t, varnames) for t in texts]


def infer_variables(texts):
    names = set()
    for text in texts:
        names.update(IDENTIFIER_PATTERN.findall(text))
    preferred = default_variables(4)
    ordered = [v for v in preferred if v in names] + sorted(names - set(preferred))
    return tuple(ordered) or ('x',)


def load_job_spec(path, default_kind=None):
    return JobSpec.from_dict(read_structured_file(path), source=path, default_kind=default_kind)


@dataclass
class VerificationReport:
    kind: str = 'verify-arrangement'
    case: str = ''
    lhs: ChowClass = None
    rhs: ChowClass = None
    hypotheses: dict = field(default_factory=dict)
    equal: object = None
    euler_check: bool = None
    dual_check: bool = None
    shadow_check: bool = None
    theorem_applies: bool = False
    essential: bool = None
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    error: str = None

    def to_dict(self):
        return {
            'kind': self.kind,
            'case': self.case,
            'lhs': self.lhs.to_list() if self.lhs else None,
            'lhs_text': self.lhs.to_text() if self.lhs else None,
            'rhs': self.rhs.to_list() if self.rhs else None,
            'rhs_text': self.rhs.to_text() if self.rhs else None,
            'hypotheses': self.hypotheses,
            'equal': self.equal,
            'euler_check': self.euler_check,
            'dual_check': self.dual_check,
            'shadow_check': self.shadow_check,
            'theorem_applies': self.theorem_applies,
            'essential': self.essential,
            'notes': list(self.notes),
            'timings': dict(self.timings),
            'error': self.error,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            kind=data.get('kind', 'verify-arrangement'),
            case=data.get('case', ''),
            lhs=ChowClass.from_list(data['lhs']) if data.get('lhs') is not None else None,
            rhs=ChowClass.from_list(data['rhs']) if data.get('rhs') is not None else None,
            hypotheses=data.get('hypotheses', {}),
            equal=data.get('equal'),
            euler_check=data.get('euler_check'),
            dual_check=data.get('dual_check'),
            shadow_check=data.get('shadow_check'),
            theorem_applies=data.get('theorem_applies', False),
            essential=data.get('essential'),
            notes=list(data.get('notes', [])),
            timings=dict(data.get('timings', {})),
            error=data.get('error'),
        )

    @property
    def exit_code(self):
        if self.error:
            return EXIT_INPUT_ERROR
        if self.equal is True:
            return EXIT_VERIFIED
        if self.equal is False or self.equal == 'not-applicable':
            return EXIT_FALSE
        return EXIT_INCONCLUSIVE


class _Stopwatch:
    def __init__(self, enabled):
        self.enabled = enabled
        self.timings = {}

    def measure(self, name, func, *args, **kwargs):
        start = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            if self.enabled:
                self.timings[name] = round(time.perf_counter() - start, 4)


def check_linear_type(h, step_cap=DEFAULT_STEP_CAP):
    """Linear type of the Jacobian ideal of h, as a report entry."""
    if h.is_constant():
        return {'status': 'true', 'chart': 'cone', 'reason': 'unit ideal'}
    budget = StepBudget(step_cap)
    try:
        result = is_linear_type(jacobian_generators(h), budget)
    except ResourceLimitExceeded as e:
        logger.warning(f"Linear type of the Jacobian ideal of {h} is inconclusive: {e}")
        return {'status': 'inconclusive', 'chart': 'cone', 'reason': str(e), 'steps': e.steps}
    entry = {'status': 'true' if result.linear_type else 'false', 'chart': 'cone', 'steps': budget.steps}
    if result.witness is not None:
        entry['witness'] = str(result.witness)
    return entry


def check_freeness(h, options, arrangement=None):
    """Run the Saito basis search; resource limits degrade to an inconclusive verdict."""
    degree_bound = options.get('degree_bound')
    if not h.is_homogeneous():
        degree_bound = options.get('bounded_search_degree', 3) if degree_bound is None else degree_bound
    try:
        return find_free_basis(h, degree_bound=degree_bound, arrangement=arrangement,
                               budget=StepBudget(options.get('step_cap', DEFAULT_STEP_CAP)))
    except ResourceLimitExceeded as e:
        logger.warning(f"Freeness of {h} is inconclusive: {e}")
        return FreenessVerdict('inconclusive', None, str(e))


def _right_hand_side(verdict, n, report):
    if verdict.status != 'free':
        return None
    try:
        return chern_log_sheaf(verdict.exponents, n)
    except ValueError as e:
        report.notes.append(str(e))
        return None


def verify_formula(arrangement, options=None):
    """Compute both sides for a central arrangement and compare them exactly."""
    options = options or {}
    watch = _Stopwatch(options.get('include_timings', True))
    report = VerificationReport(case=arrangement.name or f"{len(arrangement)} hyperplanes in P^{arrangement.n}")
    n = arrangement.n

    lattice = watch.measure('lattice', build_lattice, arrangement)
    report.lhs = watch.measure('lhs', csm_complement, arrangement, lattice)
    report.euler_check = report.lhs.degree_zero == euler_characteristic_complement(arrangement, lattice)
    report.essential = arrangement.is_essential()
    if not report.essential:
        report.notes.append(f"arrangement is not essential (rank {arrangement.rank()} < {n + 1}); "
                            f"computed without essentialization")

    h = arrangement.defining_polynomial()
    verdict = watch.measure('freeness', check_freeness, h, options, arrangement)
    report.hypotheses['free'] = verdict.to_dict()
    report.hypotheses['linear_type'] = watch.measure('linear_type', check_linear_type, h,
                                                     options.get('step_cap', DEFAULT_STEP_CAP))

    report.rhs = _right_hand_side(verdict, n, report)
    if verdict.status == 'non-free':
        report.equal = 'not-applicable'
        report.notes.append('divisor is not free; the right-hand side is undefined')
    elif report.rhs is not None:
        report.equal = report.lhs == report.rhs
        report.dual_check = dual_form_check(report.lhs, report.rhs)
        report.shadow_check = shadow_check(report.lhs, report.rhs)

    report.theorem_applies = verdict.status == 'free' and report.hypotheses['linear_type']['status'] == 'true'
    if not report.theorem_applies:
        report.notes.append('formula not asserted: hypotheses not both certified')
    elif report.equal is not True:
        logger.error(f"{report.case}: both hypotheses hold but the two sides differ")
        report.notes.append('COUNTEREXAMPLE: hypotheses hold but lhs != rhs')
    if watch.enabled:
        report.timings = dict(watch.timings, total=round(sum(watch.timings.values()), 4))
    logger.info(f"{report.case}: lhs = {report.lhs}, rhs = {report.rhs}, equal = {report.equal}")
    return report


def verify_divisor(h, options=None, case=''):
    """Hypotheses and right-hand side for a divisor given by its equation; no lattice, so no lhs."""
    options = options or {}
    watch = _Stopwatch(options.get('include_timings', True))
    report = VerificationReport(case=case or str(h))
    verdict = watch.measure('freeness', check_freeness, h, options)
    report.hypotheses['free'] = verdict.to_dict()
    report.hypotheses['linear_type'] = watch.measure('linear_type', check_linear_type, h,
                                                     options.get('step_cap', DEFAULT_STEP_CAP))
    if h.is_homogeneous():
        report.rhs = _right_hand_side(verdict, h.nvars - 1, report)
    else:
        report.notes.append('affine divisor: no projective right-hand side')
    report.theorem_applies = verdict.status == 'free' and report.hypotheses['linear_type']['status'] == 'true'
    report.notes.append('no lattice for this divisor; left-hand side not computed')
    if watch.enabled:
        report.timings = dict(watch.timings, total=round(sum(watch.timings.values()), 4))
    return report


def template_environment(template_folder=None):
    folder = template_folder or VIEWS_FOLDER
    if not os.path.isabs(folder):
        folder = os.path.join(os.path.dirname(os.path.abspath(__file__)), folder)
    return Environment(loader=FileSystemLoader(folder), keep_trailing_newline=True,
                       trim_blocks=True, lstrip_blocks=True)


def render_text(report, template_folder=None, template='report.jinja2'):
    """Render a report dict (any job kind) through the jinja2 text view."""
    return template_environment(template_folder).get_template(template).render(report=report)


def format_report(report, fmt='json', template_folder=None, template='report.jinja2'):
    if fmt == 'text':
        return render_text(report, template_folder, template)
    return json.dumps(report, indent=2, ensure_ascii=False) + '\n'


def write_report(report, path, fmt='json', template_folder=None, template='report.jinja2'):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_report(report, fmt, template_folder, template))
    logger.debug(f"Report written to {path}")
