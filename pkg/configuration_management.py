#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration management utilities for the CSM verifier.

This module provides helper functions for managing the engine configuration,
including loading, saving, validation, and merging job-level options over
the configured defaults.
"""

import copy
import json
import logging
import os

from constants import DEFAULT_STEP_CAP

logger = logging.getLogger(__name__)

# Configuration file path
CONFIG_FILE = 'config.json'

# Default configuration structure
DEFAULT_CONFIG = {
    'ENGINE': {
        'STEP_CAP': DEFAULT_STEP_CAP,
        'DEGREE_BOUND': None,
        # Order of the basis shown by linear-type jobs; decisions do not depend on it
        'MONOMIAL_ORDER': 'grevlex',
        'BOUNDED_SEARCH_DEGREE': 3
    },
    'CHOW': {
        'PROOF_CHAIN_MAX_RANK': 6
    },
    'REPORT': {
        'FORMAT': 'json',
        'INCLUDE_TIMINGS': True,
        'TEMPLATE_FOLDER': 'views'
    },
    'BATCH': {
        'WORKERS': 1
    },
    'LOGGING': {
        'LOGLEVEL': 'INFO'
    }
}

REPORT_FORMATS = ('json', 'text')
LOGLEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

# Job-file option name -> (config section, config key)
OPTION_KEYS = {
    'step_cap': ('ENGINE', 'STEP_CAP'),
    'degree_bound': ('ENGINE', 'DEGREE_BOUND'),
    'monomial_order': ('ENGINE', 'MONOMIAL_ORDER'),
    'bounded_search_degree': ('ENGINE', 'BOUNDED_SEARCH_DEGREE'),
    'proof_chain_max_rank': ('CHOW', 'PROOF_CHAIN_MAX_RANK'),
    'format': ('REPORT', 'FORMAT'),
    'include_timings': ('REPORT', 'INCLUDE_TIMINGS'),
    'template_folder': ('REPORT', 'TEMPLATE_FOLDER'),
    'workers': ('BATCH', 'WORKERS'),
}

# Options whose null value in a job file means "no limit"
NULLABLE_OPTIONS = ('step_cap', 'degree_bound')


def default_config():
    """Return a deep copy of DEFAULT_CONFIG that callers may mutate."""
    return copy.deepcopy(DEFAULT_CONFIG)


def merge_with_defaults(config):
    """
    Fill sections and keys missing from ``config`` with the defaults.

    Args:
        config: Partial configuration dictionary

    Returns:
        dict: New dictionary with every DEFAULT_CONFIG key present
    """
    merged = default_config()
    for section, values in (config or {}).items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section].update(values)
        else:
            merged[section] = values
    return merged


def reload_config(config, path=CONFIG_FILE):
    """
    Reload CONFIG from file.

    Args:
        config: Current config dict to update (passed by reference)
        path: JSON file to read; config.minimal.json is used when it is missing

    Returns:
        bool: True if successfully reloaded, False otherwise
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            loaded_config = json.load(f)
            config.clear()
            config.update(merge_with_defaults(loaded_config))
            logger.info(f"Reloaded config from {path}")
            return True
    except FileNotFoundError:
        fallback = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.minimal.json')
        try:
            with open(fallback, 'r', encoding='utf-8') as f:
                loaded_config = json.load(f)
                config.clear()
                config.update(merge_with_defaults(loaded_config))
                logger.info("Reloaded config from config.minimal.json")
                return True
        except Exception as e:
            logger.error(f"Error reloading config: {e}")
            return False
    except Exception as e:
        logger.error(f"Error reloading config: {e}")
        return False


def save_config(new_config, path=CONFIG_FILE):
    """
    Save CONFIG to file.

    Args:
        new_config: Configuration dictionary to save
        path: Destination JSON file

    Returns:
        bool: True if successfully saved, False otherwise
    """
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(new_config, f, indent=2, ensure_ascii=False)
        logger.info(f"Config saved to {path}")
        return True
    except Exception as e:
        logger.error(f"Error saving config: {e}")
        return False


def _is_positive_int(value):
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def validate_configuration(config):
    """
    Validate configuration and collect errors without raising.

    Args:
        config: Configuration dictionary to validate

    Returns:
        List of error messages (empty if no errors)
    """
    errors = []
    engine = config.get('ENGINE', {})
    chow = config.get('CHOW', {})
    report = config.get('REPORT', {})
    batch = config.get('BATCH', {})
    logging_section = config.get('LOGGING', {})

    step_cap = engine.get('STEP_CAP')
    if step_cap is not None and not _is_positive_int(step_cap):
        errors.append(f"ENGINE.STEP_CAP must be a positive integer or null, got {step_cap!r}.")

    degree_bound = engine.get('DEGREE_BOUND')
    if degree_bound is not None and not (isinstance(degree_bound, int) and degree_bound >= 0):
        errors.append(f"ENGINE.DEGREE_BOUND must be a non-negative integer or null, got {degree_bound!r}.")

    order = engine.get('MONOMIAL_ORDER', 'grevlex')
    if order not in ('lex', 'grlex', 'grevlex'):
        errors.append(f"ENGINE.MONOMIAL_ORDER '{order}' is not one of lex, grlex, grevlex.")

    bounded = engine.get('BOUNDED_SEARCH_DEGREE', 3)
    if not (isinstance(bounded, int) and bounded >= 0):
        errors.append(f"ENGINE.BOUNDED_SEARCH_DEGREE must be a non-negative integer, got {bounded!r}.")

    max_rank = chow.get('PROOF_CHAIN_MAX_RANK', 6)
    if not _is_positive_int(max_rank):
        errors.append(f"CHOW.PROOF_CHAIN_MAX_RANK must be a positive integer, got {max_rank!r}.")

    report_format = report.get('FORMAT', 'json')
    if report_format not in REPORT_FORMATS:
        errors.append(f"REPORT.FORMAT '{report_format}' is not one of {', '.join(REPORT_FORMATS)}.")

    include_timings = report.get('INCLUDE_TIMINGS', True)
    if not isinstance(include_timings, bool):
        errors.append(f"REPORT.INCLUDE_TIMINGS must be true or false, got {include_timings!r}.")

    template_folder = report.get('TEMPLATE_FOLDER', 'views')
    if not isinstance(template_folder, str):
        errors.append(f"REPORT.TEMPLATE_FOLDER must be a path, got {template_folder!r}.")

    workers = batch.get('WORKERS', 1)
    if not _is_positive_int(workers):
        errors.append(f"BATCH.WORKERS must be a positive integer, got {workers!r}.")

    loglevel = str(logging_section.get('LOGLEVEL', 'INFO')).upper()
    if loglevel not in LOGLEVELS:
        errors.append(f"LOGGING.LOGLEVEL '{loglevel}' is not a valid log level.")

    return errors


def validate_job_options(options):
    """
    Validate the "options" object of a job file with the configuration rules.

    Args:
        options: Mapping of lower-case option names to values

    Returns:
        List of error messages (empty if no errors)
    """
    config = {}
    errors = []
    for name, value in options.items():
        if name not in OPTION_KEYS:
            continue
        if value is None:
            if name not in NULLABLE_OPTIONS:
                errors.append(f"Option '{name}' cannot be null.")
            continue
        section, key = OPTION_KEYS[name]
        config.setdefault(section, {})[key] = value
    return errors + validate_configuration(config)


def job_options(config, options=None, overrides=None):
    """
    Flatten the configuration into the option dict a job runs with.

    Precedence: command line overrides, then the job file's "options", then config.
    Keys with value None in ``overrides`` are ignored (flag not given); in the job
    file, null is kept for the options in NULLABLE_OPTIONS.

    Args:
        config: Configuration dictionary
        options: "options" object of a job file
        overrides: Options taken from command line flags

    Returns:
        dict: Option name -> value for every name in OPTION_KEYS
    """
    merged = merge_with_defaults(config)
    result = {name: merged[section].get(key) for name, (section, key) in OPTION_KEYS.items()}
    for source, keep_null in ((options or {}, True), (overrides or {}, False)):
        for name, value in source.items():
            if name not in OPTION_KEYS:
                logger.warning(f"Ignoring unknown job option '{name}'")
                continue
            if value is not None or (keep_null and name in NULLABLE_OPTIONS):
                result[name] = value
    return result
