import jobs

from constants import EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_VERIFIED
from verifier import check_freeness

STATUS_EXIT_CODES = {'free': EXIT_VERIFIED, 'non-free': EXIT_FALSE, 'inconclusive': EXIT_INCONCLUSIVE}


class FreenessJob(jobs.JobBase):

    @staticmethod
    def can_process(spec):
        return spec.kind == 'freeness'

    def process_job(self, spec, options):
        report = self.base_report(spec)
        if 'arrangement' in spec.payload:
            arrangement = spec.arrangement()
            h = arrangement.defining_polynomial()
            verdict = check_freeness(h, options, arrangement)
        else:
            h = spec.polynomial()
            verdict = check_freeness(h, options)
        report['polynomial'] = str(h)
        report['freeness'] = verdict.to_dict()
        return report, STATUS_EXIT_CODES[verdict.status]
