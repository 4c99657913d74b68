import jobs

from constants import DEFAULT_STEP_CAP, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_VERIFIED
from groebner import Ideal, ResourceLimitExceeded, StepBudget, buchberger, is_linear_type, jacobian_generators
from polynomials import MonomialOrder


class LinearTypeJob(jobs.JobBase):
    """Decide Rees = Sym for explicit generators, or for the Jacobian ideal of a polynomial."""

    @staticmethod
    def can_process(spec):
        return spec.kind == 'linear-type'

    def process_job(self, spec, options):
        report = self.base_report(spec)
        if 'generators' in spec.payload:
            generators = spec.generators()
        else:
            h = spec.polynomial()
            generators = jacobian_generators(h)
            report['polynomial'] = str(h)
        report['generators'] = [str(g) for g in generators]
        order = MonomialOrder.from_name(self.get_value(spec.payload, options, 'monomial_order', 'grevlex'))
        budget = StepBudget(options.get('step_cap', DEFAULT_STEP_CAP))
        try:
            ideal = Ideal(tuple(generators), generators[0].varnames, order)
            if not ideal.is_zero():
                report['groebner_basis'] = [str(g) for g in buchberger(ideal, budget).elements]
                report['order'] = str(order)
            result = is_linear_type(generators, budget)
        except ResourceLimitExceeded as e:
            report['linear_type'] = None
            report['reason'] = str(e)
            report['steps'] = e.steps
            return report, EXIT_INCONCLUSIVE
        report['linear_type'] = result.linear_type
        report['witness'] = str(result.witness) if result.witness is not None else None
        report['sym'] = result.sym.to_strings()
        report['rees'] = result.rees.to_strings() if result.rees is not None else None
        report['steps'] = budget.steps
        return report, EXIT_VERIFIED if result.linear_type else EXIT_FALSE
