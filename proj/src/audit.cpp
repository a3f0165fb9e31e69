#include <random>

#include "rsp/corrections.hpp"
#include "rsp/protocol.hpp"
#include "rsp/rng.hpp"

namespace rsp {

namespace {

struct BranchView {
    PureState pre_correction;
    PureState target;
};

BranchView replay(AuditProtocol protocol, const AnglesVariant& params, int a_out, int b_out) {
    if (protocol == AuditProtocol::qubit) {
        const QubitBranch br = qubit_branch(std::get<Angles2>(params), a_out, b_out);
        return BranchView{br.pre_correction, br.target};
    }
    const QuditBranch br = qudit_branch(std::get<Angles4>(params), a_out, b_out);
    return BranchView{br.pre_correction, br.target};
}

}  // namespace

CorrectionReport audit_tables(AuditProtocol protocol, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("audit_tables: samples must be >= 1");

    const int d = protocol == AuditProtocol::qubit ? 2 : 4;
    CorrectionReport report;
    report.protocol = protocol;
    report.samples = samples;
    report.seed = seed;
    report.pairs.resize(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            CorrectionAudit& pair = report.pairs[static_cast<size_t>(a * d + b)];
            pair.a_out = a;
            pair.b_out = b;
            pair.table_matrix = protocol == AuditProtocol::qubit ? qubit_correction_table(a, b)
                                                                 : charlie_correction_table(a, b);
        }

    std::mt19937_64 g(seed);
    for (int s = 0; s < samples; ++s) {
        const AnglesVariant params = protocol == AuditProtocol::qubit
                                         ? AnglesVariant(random_angles2(g))
                                         : AnglesVariant(random_angles4(g));
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                CorrectionAudit& pair = report.pairs[static_cast<size_t>(a * d + b)];
                const BranchView view = replay(protocol, params, a, b);
                if (view.pre_correction.empty()) continue;  // degenerate branch, nothing to audit

                const double table_fid =
                    fidelity(apply_local(pair.table_matrix, 0, view.pre_correction), view.target);
                pair.max_fidelity_deficit = std::max(pair.max_fidelity_deficit, 1.0 - table_fid);
                if (table_fid < 1.0 - kCheckTol) {
                    pair.agree = false;
                    report.discrepancies.push_back(AuditDiscrepancy{a, b, params, table_fid});
                }

                const UnitaryMatrix oracle = derive_monomial_correction(view.pre_correction, view.target);
                const double oracle_fid =
                    fidelity(apply_local(oracle, 0, view.pre_correction), view.target);
                pair.min_oracle_fidelity = std::min(pair.min_oracle_fidelity, oracle_fid);
                if (pair.oracle_matrix.empty()) pair.oracle_matrix = oracle;
            }
        }
    }
    return report;
}

}  // namespace rsp
