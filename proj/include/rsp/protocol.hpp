/*
 * Protocol orchestration: party state machines exchanging classical
 * messages over a strictly ordered single-threaded schedule.
 *
 * Qubit protocol: Alice holds particles 1 and 2 of a three-qubit GHZ state,
 * Bob particle 3. Alice measures particle 1 in the magnitude basis, then
 * particle 2 in the phase basis selected by the first outcome; each outcome
 * is one 1-bit message to Bob, who applies a correction.
 *
 * Qudit protocol (d = 4 or 8): Alice, Bob, Charlie each hold one particle of
 * a d-level GHZ state. Alice measures in the magnitude basis and messages
 * Bob (log2 d bits); Bob applies the intermediate unitary, measures in the
 * phase basis and messages Charlie (log2 d bits); Charlie corrects.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsp/corrections.hpp"
#include "rsp/qudit.hpp"
#include "rsp/unitary.hpp"

namespace rsp {

enum class PartyId { alice, bob, charlie };
const char* to_string(PartyId p);

struct ClassicalMessage {
    PartyId from = PartyId::alice;
    PartyId to = PartyId::bob;
    int outcome = 0;
    int bit_cost = 0;  // ceil(log2 d) per message
};

struct AppliedCorrection {
    PartyId party = PartyId::bob;
    std::string label;
    UnitaryMatrix matrix;
};

struct RunMode {
    enum class Kind { sample, enumerate_all };
    Kind kind = Kind::enumerate_all;
    std::uint64_t seed = 0;

    static RunMode sample(std::uint64_t s) { return RunMode{Kind::sample, s}; }
    static RunMode enumerate_all() { return RunMode{Kind::enumerate_all, 0}; }
};

/// Full record of one protocol branch: outcomes, messages, corrections,
/// delivered state, fidelity against the target, and total message bits.
struct ProtocolTrace {
    std::string protocol;  // "qubit" | "d4" | "d8"
    AnglesVariant params;
    std::vector<int> outcomes;  // [first-stage, second-stage]
    std::vector<ClassicalMessage> messages;
    std::vector<AppliedCorrection> corrections;
    double probability = 0.0;  // joint probability of this branch
    PureState final_state;
    double fidelity = 0.0;
    int total_bits = 0;
};

/// Enumerate yields every non-degenerate branch combination; sample yields one
/// trace drawn by Born probabilities from the per-event seeded engines.
std::vector<ProtocolTrace> run_qubit_rsp(const Angles2& a, const RunMode& mode);
std::vector<ProtocolTrace> run_qudit_rsp(const Angles4& a, const RunMode& mode);
std::vector<ProtocolTrace> run_qudit_rsp(const Angles8& a, const RunMode& mode);

/// Sum of message bit costs.
int comm_cost(const ProtocolTrace& t);

/// Single-branch replay of the qubit protocol, stopping before the correction.
struct QubitBranch {
    int a_out = 0;
    int b_out = 0;
    double joint_probability = 0.0;
    PureState pre_correction;  // Bob's particle before correction
    PureState target;
};
QubitBranch qubit_branch(const Angles2& a, int a_out, int b_out);

/// Single-branch replay of the qudit protocol with the intermediate checkpoints.
struct QuditBranch {
    int a_out = 0;
    int b_out = 0;
    double joint_probability = 0.0;
    PureState after_alice;         // BC state collapsed by Alice's outcome
    PureState after_intermediate;  // BC state after Bob's unitary
    PureState pre_correction;      // Charlie's particle before correction
    PureState target;
};
QuditBranch qudit_branch(const Angles4& a, int a_out, int b_out);
QuditBranch qudit_branch(const Angles8& a, int a_out, int b_out);

/*
 * Swapped-stage experiment: measure particle 1 in the phase basis first and
 * particle 2 in the magnitude basis second, then ask per branch how well the
 * fixed parameter-independent set {I, σ_x, σ_z, σ_z σ_x} can correct, versus
 * the oracle's φ-dependent monomial.
 */
struct StageOrderBranch {
    int phase_out = 0;
    int theta_out = 0;
    double joint_probability = 0.0;
    double best_fixed_fidelity = 0.0;
    std::string best_fixed_label;
    double oracle_fidelity = 0.0;
};

struct StageOrderReport {
    Angles2 params;
    std::vector<StageOrderBranch> branches;

    double min_best_fixed() const;
    double min_oracle() const;
};

StageOrderReport stage_order_experiment(const Angles2& a);

}  // namespace rsp
