#include "rsp/protocol.hpp"

#include <cmath>
#include <random>

#include "rsp/bases.hpp"
#include "rsp/rng.hpp"

namespace rsp {

namespace {

int bits_for_dim(int d) {
    int bits = 0;
    while ((1 << bits) < d) ++bits;
    return bits;
}

/// Inverse-CDF draw over non-degenerate branches.
int sample_outcome(const std::vector<OutcomeBranch>& branches, std::mt19937_64& g) {
    const double u = uniform01(g);
    double acc = 0.0;
    int last = -1;
    for (const OutcomeBranch& br : branches) {
        if (br.degenerate) continue;
        acc += br.probability;
        last = br.outcome;
        if (u < acc) return br.outcome;
    }
    return last;  // u landed in the roundoff tail
}

Basis qubit_second_basis(const Angles2& a, int first_outcome) {
    return first_outcome == 0 ? phase_basis(2, {0.0, a.phi}) : xi_basis(a.phi);
}

ProtocolTrace qubit_trace(const Angles2& a, const PureState& target,
                          const OutcomeBranch& b1, const OutcomeBranch& b2) {
    ProtocolTrace t;
    t.protocol = "qubit";
    t.params = a;
    t.outcomes = {b1.outcome, b2.outcome};
    t.messages = {{PartyId::alice, PartyId::bob, b1.outcome, 1},
                  {PartyId::alice, PartyId::bob, b2.outcome, 1}};
    const UnitaryMatrix m = derive_monomial_correction(b2.collapsed, target);
    t.corrections = {{PartyId::bob, "oracle", m}};
    t.final_state = apply_local(m, 0, b2.collapsed);
    t.fidelity = fidelity(t.final_state, target);
    t.probability = b1.probability * b2.probability;
    t.total_bits = comm_cost(t);
    return t;
}

struct QuditPieces {
    int d = 0;
    std::string name;
    PureState target;
    Basis alice;
    std::vector<double> bob_phases;

    QuditPieces(int dim, std::string protocol_name, PureState tgt, Basis ab, std::vector<double> phases)
        : d(dim), name(std::move(protocol_name)), target(std::move(tgt)),
          alice(std::move(ab)), bob_phases(std::move(phases)) {}
};

QuditPieces qudit_pieces(const Angles4& a) {
    validate_angles(a);
    return QuditPieces(4, "d4", from_angles4(a),
                       alice_basis_d4(a.gamma1, a.gamma2, a.gamma3),
                       {0.0, a.alpha1, a.alpha2, a.alpha3});
}

QuditPieces qudit_pieces(const Angles8& a) {
    validate_angles(a);
    Basis alice = [&] {
        try {
            return alice_basis_d8(a.thetas);
        } catch (const BasisError& e) {
            throw ProtocolUnavailable(std::string("d8 magnitude stage unavailable: ") + e.what());
        }
    }();
    std::vector<double> phases(a.phis.begin(), a.phis.end());
    return QuditPieces(8, "d8", from_angles8(a), std::move(alice), std::move(phases));
}

UnitaryMatrix intermediate_for(int d, int a_out) {
    return d == 4 ? bob_intermediate_unitary(a_out) : bob_intermediate_unitary_d8(a_out);
}

ProtocolTrace qudit_trace(const QuditPieces& p, const AnglesVariant& params,
                          const OutcomeBranch& b1, const UnitaryMatrix& w,
                          const OutcomeBranch& b2) {
    const int bits = bits_for_dim(p.d);
    ProtocolTrace t;
    t.protocol = p.name;
    t.params = params;
    t.outcomes = {b1.outcome, b2.outcome};
    t.messages = {{PartyId::alice, PartyId::bob, b1.outcome, bits},
                  {PartyId::bob, PartyId::charlie, b2.outcome, bits}};
    const UnitaryMatrix m = derive_monomial_correction(b2.collapsed, p.target);
    t.corrections = {{PartyId::bob, b1.outcome == 0 ? "identity" : "intermediate", w},
                     {PartyId::charlie, "oracle", m}};
    t.final_state = apply_local(m, 0, b2.collapsed);
    t.fidelity = fidelity(t.final_state, p.target);
    t.probability = b1.probability * b2.probability;
    t.total_bits = comm_cost(t);
    return t;
}

std::vector<ProtocolTrace> run_qudit_impl(const QuditPieces& p, const AnglesVariant& params,
                                          const RunMode& mode) {
    const PureState channel = ghz(3, p.d);
    const std::vector<OutcomeBranch> stage1 = measure_branches(channel, 0, p.alice);
    const Basis bob_basis = phase_basis(p.d, p.bob_phases);

    std::vector<ProtocolTrace> traces;
    if (mode.kind == RunMode::Kind::enumerate_all) {
        for (const OutcomeBranch& b1 : stage1) {
            if (b1.degenerate) continue;
            const UnitaryMatrix w = intermediate_for(p.d, b1.outcome);
            const PureState rotated = apply_local(w, 0, b1.collapsed);
            for (const OutcomeBranch& b2 : measure_branches(rotated, 0, bob_basis)) {
                if (b2.degenerate) continue;
                traces.push_back(qudit_trace(p, params, b1, w, b2));
            }
        }
    } else {
        std::mt19937_64 g1(event_seed(mode.seed, 0));
        std::mt19937_64 g2(event_seed(mode.seed, 1));
        const OutcomeBranch& b1 = stage1[static_cast<size_t>(sample_outcome(stage1, g1))];
        const UnitaryMatrix w = intermediate_for(p.d, b1.outcome);
        const PureState rotated = apply_local(w, 0, b1.collapsed);
        const std::vector<OutcomeBranch> stage2 = measure_branches(rotated, 0, bob_basis);
        const OutcomeBranch& b2 = stage2[static_cast<size_t>(sample_outcome(stage2, g2))];
        traces.push_back(qudit_trace(p, params, b1, w, b2));
    }
    return traces;
}

}  // namespace

const char* to_string(PartyId p) {
    switch (p) {
        case PartyId::alice: return "alice";
        case PartyId::bob: return "bob";
        default: return "charlie";
    }
}

std::vector<ProtocolTrace> run_qubit_rsp(const Angles2& a, const RunMode& mode) {
    validate_angles(a);
    const PureState target = from_angles2(a);
    const PureState channel = ghz(3, 2);
    const std::vector<OutcomeBranch> stage1 = measure_branches(channel, 0, alice_basis_d2(a.theta));

    std::vector<ProtocolTrace> traces;
    if (mode.kind == RunMode::Kind::enumerate_all) {
        for (const OutcomeBranch& b1 : stage1) {
            if (b1.degenerate) continue;
            const Basis second = qubit_second_basis(a, b1.outcome);
            for (const OutcomeBranch& b2 : measure_branches(b1.collapsed, 0, second)) {
                if (b2.degenerate) continue;
                traces.push_back(qubit_trace(a, target, b1, b2));
            }
        }
    } else {
        std::mt19937_64 g1(event_seed(mode.seed, 0));
        std::mt19937_64 g2(event_seed(mode.seed, 1));
        const OutcomeBranch& b1 = stage1[static_cast<size_t>(sample_outcome(stage1, g1))];
        const Basis second = qubit_second_basis(a, b1.outcome);
        const std::vector<OutcomeBranch> stage2 = measure_branches(b1.collapsed, 0, second);
        const OutcomeBranch& b2 = stage2[static_cast<size_t>(sample_outcome(stage2, g2))];
        traces.push_back(qubit_trace(a, target, b1, b2));
    }
    return traces;
}

std::vector<ProtocolTrace> run_qudit_rsp(const Angles4& a, const RunMode& mode) {
    return run_qudit_impl(qudit_pieces(a), a, mode);
}

std::vector<ProtocolTrace> run_qudit_rsp(const Angles8& a, const RunMode& mode) {
    return run_qudit_impl(qudit_pieces(a), a, mode);
}

int comm_cost(const ProtocolTrace& t) {
    int bits = 0;
    for (const ClassicalMessage& m : t.messages) bits += m.bit_cost;
    return bits;
}

QubitBranch qubit_branch(const Angles2& a, int a_out, int b_out) {
    validate_angles(a);
    if (a_out < 0 || a_out > 1 || b_out < 0 || b_out > 1)
        throw std::out_of_range("qubit_branch: outcome out of range");
    const std::vector<OutcomeBranch> stage1 =
        measure_branches(ghz(3, 2), 0, alice_basis_d2(a.theta));
    const OutcomeBranch& b1 = stage1[static_cast<size_t>(a_out)];
    QubitBranch out;
    out.a_out = a_out;
    out.b_out = b_out;
    out.target = from_angles2(a);
    if (b1.degenerate) return out;
    const std::vector<OutcomeBranch> stage2 =
        measure_branches(b1.collapsed, 0, qubit_second_basis(a, a_out));
    const OutcomeBranch& b2 = stage2[static_cast<size_t>(b_out)];
    out.joint_probability = b1.probability * b2.probability;
    if (!b2.degenerate) out.pre_correction = b2.collapsed;
    return out;
}

namespace {

QuditBranch qudit_branch_impl(const QuditPieces& p, int a_out, int b_out) {
    if (a_out < 0 || a_out >= p.d || b_out < 0 || b_out >= p.d)
        throw std::out_of_range("qudit_branch: outcome out of range");
    QuditBranch out;
    out.a_out = a_out;
    out.b_out = b_out;
    out.target = p.target;
    const std::vector<OutcomeBranch> stage1 = measure_branches(ghz(3, p.d), 0, p.alice);
    const OutcomeBranch& b1 = stage1[static_cast<size_t>(a_out)];
    if (b1.degenerate) return out;
    out.after_alice = b1.collapsed;
    out.after_intermediate = apply_local(intermediate_for(p.d, a_out), 0, b1.collapsed);
    const std::vector<OutcomeBranch> stage2 =
        measure_branches(out.after_intermediate, 0, phase_basis(p.d, p.bob_phases));
    const OutcomeBranch& b2 = stage2[static_cast<size_t>(b_out)];
    out.joint_probability = b1.probability * b2.probability;
    if (!b2.degenerate) out.pre_correction = b2.collapsed;
    return out;
}

}  // namespace

QuditBranch qudit_branch(const Angles4& a, int a_out, int b_out) {
    return qudit_branch_impl(qudit_pieces(a), a_out, b_out);
}

QuditBranch qudit_branch(const Angles8& a, int a_out, int b_out) {
    return qudit_branch_impl(qudit_pieces(a), a_out, b_out);
}

double StageOrderReport::min_best_fixed() const {
    double m = 1.0;
    for (const StageOrderBranch& b : branches) m = std::min(m, b.best_fixed_fidelity);
    return m;
}

double StageOrderReport::min_oracle() const {
    double m = 1.0;
    for (const StageOrderBranch& b : branches) m = std::min(m, b.oracle_fidelity);
    return m;
}

StageOrderReport stage_order_experiment(const Angles2& a) {
    validate_angles(a);
    StageOrderReport report;
    report.params = a;
    const PureState target = from_angles2(a);

    struct Fixed {
        const char* label;
        UnitaryMatrix m;
    };
    const Fixed fixed[4] = {{"I", UnitaryMatrix::identity(2)},
                            {"sigma_x", UnitaryMatrix::sigma_x()},
                            {"sigma_z", UnitaryMatrix::sigma_z()},
                            {"sigma_z*sigma_x", UnitaryMatrix::sigma_z() * UnitaryMatrix::sigma_x()}};

    // Swapped order: phase basis on particle 1 first, magnitude basis second.
    const std::vector<OutcomeBranch> stage1 =
        measure_branches(ghz(3, 2), 0, phase_basis(2, {0.0, a.phi}));
    for (const OutcomeBranch& b1 : stage1) {
        if (b1.degenerate) continue;
        for (const OutcomeBranch& b2 : measure_branches(b1.collapsed, 0, alice_basis_d2(a.theta))) {
            if (b2.degenerate) continue;
            StageOrderBranch row;
            row.phase_out = b1.outcome;
            row.theta_out = b2.outcome;
            row.joint_probability = b1.probability * b2.probability;
            for (const Fixed& f : fixed) {
                const double fid = fidelity(apply_local(f.m, 0, b2.collapsed), target);
                if (fid > row.best_fixed_fidelity) {
                    row.best_fixed_fidelity = fid;
                    row.best_fixed_label = f.label;
                }
            }
            try {
                const UnitaryMatrix m = derive_monomial_correction(b2.collapsed, target);
                row.oracle_fidelity = fidelity(apply_local(m, 0, b2.collapsed), target);
            } catch (const NoMonomialCorrection&) {
                row.oracle_fidelity = 0.0;
            }
            report.branches.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace rsp
