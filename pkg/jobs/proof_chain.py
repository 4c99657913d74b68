import jobs

from chow import proof_chain_check
from constants import EXIT_FALSE, EXIT_VERIFIED
from verifier import JobSpecError


class ProofChainJob(jobs.JobBase):

    @staticmethod
    def can_process(spec):
        return spec.kind == 'proof-chain'

    def process_job(self, spec, options):
        n = spec.payload['n']
        if not isinstance(n, int) or isinstance(n, bool):
            raise JobSpecError(f"'n' must be an integer, got {n!r}")
        max_rank = self.get_value(spec.payload, options, 'proof_chain_max_rank', 6)
        result = proof_chain_check(n, max_rank)
        report = self.base_report(spec)
        report.update(result.to_dict())
        return report, EXIT_VERIFIED if result.ok else EXIT_FALSE
