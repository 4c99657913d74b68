import jobs

from arrangements import (build_lattice, characteristic_polynomial, csm_complement, csm_divisor,
                          euler_characteristic_complement, factor_over_integers, mobius_sum_rule_holds,
                          poincare_polynomial)
from constants import EXIT_VERIFIED


class CharPolyJob(jobs.JobBase):

    @staticmethod
    def can_process(spec):
        return spec.kind == 'char-poly'

    def process_job(self, spec, options):
        arrangement = spec.arrangement()
        lattice = build_lattice(arrangement)
        chi = characteristic_polynomial(arrangement, lattice)
        roots, residual = factor_over_integers(chi)
        report = self.base_report(spec)
        report.update({
            'characteristic_polynomial': chi.to_list(),
            'characteristic_polynomial_text': chi.to_text(),
            'poincare_polynomial': list(poincare_polynomial(arrangement, lattice)),
            'integer_roots': list(roots),
            'residual': list(residual),
            'flats': len(lattice.flats),
            'mobius_sum_rule': mobius_sum_rule_holds(lattice),
            'euler_characteristic': euler_characteristic_complement(arrangement, lattice),
            'csm_complement': csm_complement(arrangement, lattice).to_list(),
            'csm_divisor': csm_divisor(arrangement, lattice).to_list(),
            'essential': arrangement.is_essential(),
        })
        return report, EXIT_VERIFIED
