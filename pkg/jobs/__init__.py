import importlib
import logging
import pkgutil
import traceback

from verifier import JobSpecError

logger = logging.getLogger(__name__)


class JobBase:
    """Basic job handler. Concrete handlers will inherit from this one
    """
    plugins = []

    # Subclasses register themselves as handlers
    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.plugins.append(cls)

    @staticmethod
    def process_with_plugins(spec, options):
        """Run ``spec`` with the first handler that accepts its kind; returns (report dict, exit code)."""
        for handler in JobBase.plugins:
            if handler.can_process(spec):
                instance = handler()
                logger.debug(f"Processing {spec.kind} job '{spec.case}' with {type(instance).__name__}")
                return instance.process_job(spec, options)
        raise JobSpecError(f"No handler for job kind {spec.kind!r}")

    @staticmethod
    def get_value(payload, options, keyname, default=None):
        return payload.get(keyname, options.get(keyname, default))

    @staticmethod
    def base_report(spec):
        return {'kind': spec.kind, 'case': spec.case}


def discover_handlers():
    """
    Import every submodule of the jobs package so its handlers register.

    A submodule that fails to import is logged and skipped.

    Returns:
        list: Names of the submodules imported
    """
    loaded = []
    for module in pkgutil.iter_modules(__path__):
        if module.name.startswith('_'):
            continue
        try:
            importlib.import_module(f"{__name__}.{module.name}")
            loaded.append(module.name)
            logger.debug(f"loaded job handlers from {module.name}")
        except Exception:
            logger.error(f"failed to load job handlers from {module.name}:\n{traceback.format_exc()}")
    return loaded


discover_handlers()
