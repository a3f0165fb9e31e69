/*
 * Receiver-side correction unitaries.
 *
 * The tabulated matrices are the standard correction tables for both
 * protocols; derive_monomial_correction is the constructive oracle that
 * synthesizes a phased permutation for any (collapsed, target) pair with
 * matching magnitude multisets. Live protocol runs apply oracle-derived
 * corrections; audit_tables replays every outcome pair and checks each
 * tabulated matrix against the oracle.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "rsp/qudit.hpp"
#include "rsp/unitary.hpp"

namespace rsp {

/// Qubit receiver corrections: (0,0)→I, (0,1)→σ_z, (1,0)→σ_z σ_x, (1,1)→σ_x.
UnitaryMatrix qubit_correction_table(int a_out, int b_out);

/// d=4 middle party: identity for outcome 0, otherwise the signed-permutation
/// matrix that re-sorts the collapsed magnitudes into computational order.
UnitaryMatrix bob_intermediate_unitary(int a_out);

/// d=8 analogue, generated from the octonion pattern.
UnitaryMatrix bob_intermediate_unitary_d8(int a_out);

/// d=4 final-receiver corrections for all 16 (a_out, b_out) pairs.
UnitaryMatrix charlie_correction_table(int a_out, int b_out);

/*
 * Constructive oracle: a monomial unitary M with M·collapsed = target
 * (exactly, up to roundoff). Magnitudes are matched by a stable sorted
 * pairing (ties broken lowest index first), each matched entry is the
 * unit-modulus phase of target_k / collapsed_{π(k)}, and zero-magnitude
 * positions are completed with entry 1. Throws NoMonomialCorrection when
 * the magnitude multisets differ by more than kMagnitudeTol.
 */
UnitaryMatrix derive_monomial_correction(const PureState& collapsed, const PureState& target);

enum class AuditProtocol { qubit, d4 };

struct CorrectionAudit {
    int a_out = 0;
    int b_out = 0;
    UnitaryMatrix table_matrix;
    UnitaryMatrix oracle_matrix;        // representative, from the first sample
    bool agree = true;                  // table matrix delivered >= 1 - kCheckTol on every sample
    double max_fidelity_deficit = 0.0;  // max over samples of 1 - table fidelity
    double min_oracle_fidelity = 1.0;
};

struct AuditDiscrepancy {
    int a_out = 0;
    int b_out = 0;
    AnglesVariant params;
    double fidelity = 0.0;  // what the table matrix achieved on this sample
};

struct CorrectionReport {
    AuditProtocol protocol = AuditProtocol::qubit;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<CorrectionAudit> pairs;
    std::vector<AuditDiscrepancy> discrepancies;

    bool clean() const { return discrepancies.empty(); }
};

/// Replay every outcome pair over `samples` random parameter sets.
CorrectionReport audit_tables(AuditProtocol protocol, int samples, std::uint64_t seed);

}  // namespace rsp
