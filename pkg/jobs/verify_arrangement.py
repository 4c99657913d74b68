import jobs

from verifier import verify_divisor, verify_formula


class VerifyArrangementJob(jobs.JobBase):

    @staticmethod
    def can_process(spec):
        return spec.kind == 'verify-arrangement'

    def process_job(self, spec, options):
        if 'arrangement' in spec.payload:
            report = verify_formula(spec.arrangement(), options)
        else:
            report = verify_divisor(spec.polynomial(), options, spec.case)
        report.case = spec.case
        return report.to_dict(), report.exit_code
