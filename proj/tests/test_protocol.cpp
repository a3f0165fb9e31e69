#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "rsp/bases.hpp"
#include "rsp/corrections.hpp"
#include "rsp/protocol.hpp"
#include "rsp/rng.hpp"

using namespace rsp;

namespace {

constexpr double kPi = std::numbers::pi;

void check_message_discipline(const ProtocolTrace& t, int expected_bits_per_message) {
    REQUIRE(t.messages.size() == 2);
    CHECK(t.messages[0].from == PartyId::alice);
    CHECK(t.messages[0].to == PartyId::bob);
    if (t.protocol == "qubit") {
        CHECK(t.messages[1].from == PartyId::alice);
        CHECK(t.messages[1].to == PartyId::bob);
    } else {
        CHECK(t.messages[1].from == PartyId::bob);
        CHECK(t.messages[1].to == PartyId::charlie);
    }
    for (const ClassicalMessage& m : t.messages) CHECK(m.bit_cost == expected_bits_per_message);
    CHECK(comm_cost(t) == t.total_bits);
    CHECK(t.total_bits == 2 * expected_bits_per_message);
}

}  // namespace

TEST_CASE("qubit protocol delivers the target on every enumerated branch") {
    const Angles2 a{kPi / 3, kPi / 5};
    const auto traces = run_qubit_rsp(a, RunMode::enumerate_all());
    REQUIRE(traces.size() == 4);
    const PureState target = from_angles2(a);
    std::map<std::pair<int, int>, int> seen;
    for (const ProtocolTrace& t : traces) {
        CHECK(std::abs(t.probability - 0.25) < 1e-12);
        CHECK(t.fidelity >= 1.0 - 1e-12);
        CHECK(fidelity(t.final_state, target) >= 1.0 - 1e-12);
        check_message_discipline(t, 1);
        REQUIRE(t.outcomes.size() == 2);
        seen[{t.outcomes[0], t.outcomes[1]}]++;
        CHECK(t.messages[0].outcome == t.outcomes[0]);
        CHECK(t.messages[1].outcome == t.outcomes[1]);
    }
    CHECK(seen.size() == 4);  // every outcome pair exactly once
}

TEST_CASE("qubit protocol at the pole state delivers |0> on all live branches") {
    const auto traces = run_qubit_rsp({0.0, 0.0}, RunMode::enumerate_all());
    const PureState zero = make_state({2}, {1.0, 0.0});
    CHECK(traces.size() == 4);
    for (const ProtocolTrace& t : traces) CHECK(fidelity(t.final_state, zero) >= 1.0 - 1e-12);
}

TEST_CASE("qubit protocol determinism holds over random parameters") {
    std::mt19937_64 g(51);
    for (int trial = 0; trial < 200; ++trial) {
        const Angles2 a = random_angles2(g);
        const auto traces = run_qubit_rsp(a, RunMode::enumerate_all());
        REQUIRE(traces.size() == 4);
        for (const ProtocolTrace& t : traces) {
            CHECK(std::abs(t.probability - 0.25) < 1e-12);
            CHECK(t.fidelity >= 1.0 - 1e-12);
            CHECK(t.total_bits == 2);
        }
    }
}

TEST_CASE("sampled qubit run is a single reproducible trace") {
    const Angles2 a{kPi / 3, kPi / 5};
    const auto once = run_qubit_rsp(a, RunMode::sample(7));
    REQUIRE(once.size() == 1);
    CHECK(once[0].fidelity >= 1.0 - 1e-12);
    CHECK(once[0].total_bits == 2);
    CHECK(std::abs(once[0].probability - 0.25) < 1e-12);

    const auto again = run_qubit_rsp(a, RunMode::sample(7));
    CHECK(once[0].outcomes == again[0].outcomes);
    CHECK(test::max_amp_diff(once[0].final_state, again[0].final_state) == 0.0);
}

TEST_CASE("sampled branch frequencies match the uniform joint law") {
    const Angles2 a{1.1, 2.3};
    const int runs = 100000;
    std::array<int, 4> counts{};
    std::mt19937_64 seed_stream(4242);
    for (int i = 0; i < runs; ++i) {
        const auto traces = run_qubit_rsp(a, RunMode::sample(seed_stream()));
        counts[static_cast<size_t>(traces[0].outcomes[0] * 2 + traces[0].outcomes[1])]++;
    }
    // three standard errors around p = 1/4
    const double p = 0.25;
    const double sigma = std::sqrt(p * (1.0 - p) / runs);
    for (int k = 0; k < 4; ++k) {
        const double freq = static_cast<double>(counts[static_cast<size_t>(k)]) / runs;
        CHECK(std::abs(freq - p) < 3.0 * sigma);
    }
}

TEST_CASE("reusing the unswapped phase basis after the orthogonal outcome breaks the fixed set") {
    const Angles2 a{kPi / 3, kPi / 5};
    const PureState target = from_angles2(a);
    const auto stage1 = measure_branches(ghz(3, 2), 0, alice_basis_d2(a.theta));
    // wrong adaptive choice: phase basis instead of the swap basis
    const auto stage2 = measure_branches(stage1[1].collapsed, 0, phase_basis(2, {0.0, a.phi}));
    const UnitaryMatrix fixed[4] = {UnitaryMatrix::identity(2), UnitaryMatrix::sigma_x(),
                                    UnitaryMatrix::sigma_z(),
                                    UnitaryMatrix::sigma_z() * UnitaryMatrix::sigma_x()};
    for (const OutcomeBranch& br : stage2) {
        double best = 0.0;
        for (const UnitaryMatrix& u : fixed)
            best = std::max(best, fidelity(apply_local(u, 0, br.collapsed), target));
        CHECK(best < 1.0 - 1e-3);
    }
}

TEST_CASE("swapped stage order defeats the fixed correction set but not the oracle") {
    const StageOrderReport report = stage_order_experiment({kPi / 3, kPi / 5});
    REQUIRE(report.branches.size() == 4);
    for (const StageOrderBranch& b : report.branches) {
        CHECK(std::abs(b.joint_probability - 0.25) < 1e-12);
        CHECK(b.oracle_fidelity >= 1.0 - 1e-12);
    }
    CHECK(report.min_best_fixed() < 1.0 - 1e-3);
    CHECK(report.min_oracle() >= 1.0 - 1e-12);
}

TEST_CASE("swapped stage order is harmless for a real equatorial state") {
    const StageOrderReport report = stage_order_experiment({kPi / 2, 0.0});
    CHECK(report.min_best_fixed() >= 1.0 - 1e-12);
}

TEST_CASE("swapped stage order is trivial at the pole") {
    const StageOrderReport report = stage_order_experiment({0.0, 1.0});
    CHECK(report.min_best_fixed() >= 1.0 - 1e-12);
    CHECK(report.min_oracle() >= 1.0 - 1e-12);
}

TEST_CASE("d4 protocol delivers the target on all 16 branches") {
    const Angles4 a{kPi / 4, kPi / 4, kPi / 4, kPi / 3, kPi / 5, kPi / 7};
    const auto traces = run_qudit_rsp(a, RunMode::enumerate_all());
    REQUIRE(traces.size() == 16);
    std::map<std::pair<int, int>, int> seen;
    for (const ProtocolTrace& t : traces) {
        CHECK(std::abs(t.probability - 1.0 / 16.0) < 1e-12);
        CHECK(t.fidelity >= 1.0 - 1e-12);
        check_message_discipline(t, 2);
        seen[{t.outcomes[0], t.outcomes[1]}]++;
        // Bob's unitary is recorded ahead of Charlie's oracle correction
        REQUIRE(t.corrections.size() == 2);
        CHECK(t.corrections[0].party == PartyId::bob);
        CHECK(t.corrections[1].party == PartyId::charlie);
        CHECK(t.corrections[1].label == "oracle");
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("d4 protocol determinism holds over random parameters") {
    std::mt19937_64 g(52);
    for (int trial = 0; trial < 50; ++trial) {
        const Angles4 a = random_angles4(g);
        const auto traces = run_qudit_rsp(a, RunMode::enumerate_all());
        REQUIRE(traces.size() == 16);
        for (const ProtocolTrace& t : traces) {
            CHECK(std::abs(t.probability - 1.0 / 16.0) < 1e-12);
            CHECK(t.fidelity >= 1.0 - 1e-12);
            CHECK(t.total_bits == 4);
        }
    }
}

TEST_CASE("d4 zero-angle run prepares |0> everywhere") {
    const auto traces = run_qudit_rsp(Angles4{}, RunMode::enumerate_all());
    const PureState zero = make_state({4}, {1.0, 0.0, 0.0, 0.0});
    CHECK(traces.size() == 16);
    for (const ProtocolTrace& t : traces) CHECK(fidelity(t.final_state, zero) >= 1.0 - 1e-12);
}

TEST_CASE("d4 branch-1 intermediate state matches its closed form") {
    std::mt19937_64 g(53);
    for (int trial = 0; trial < 100; ++trial) {
        const Angles4 a = random_angles4(g);
        const QuditBranch br = qudit_branch(a, 1, 0);
        const double b = std::sin(a.gamma1) * std::cos(a.gamma2);
        const double c0 = std::cos(a.gamma1);
        const double c = std::sin(a.gamma1) * std::sin(a.gamma2) * std::cos(a.gamma3);
        const double d = std::sin(a.gamma1) * std::sin(a.gamma2) * std::sin(a.gamma3);
        std::vector<Complex> expect(16, Complex(0.0, 0.0));
        expect[4 * 1 + 0] = b;   // |10⟩
        expect[4 * 0 + 1] = c0;  // |01⟩
        expect[4 * 3 + 2] = d;   // |32⟩
        expect[4 * 2 + 3] = c;   // |23⟩
        CHECK(test::max_amp_diff(br.after_intermediate, expect) < 1e-12);
        CHECK(std::abs(br.joint_probability - 1.0 / 16.0) < 1e-12);
    }
}

TEST_CASE("d8 protocol delivers the target on all 64 branches") {
    std::mt19937_64 g(54);
    const Angles8 a = random_angles8(g);
    const auto traces = run_qudit_rsp(a, RunMode::enumerate_all());
    REQUIRE(traces.size() == 64);
    for (const ProtocolTrace& t : traces) {
        CHECK(std::abs(t.probability - 1.0 / 64.0) < 1e-12);
        CHECK(t.fidelity >= 1.0 - 1e-12);
        check_message_discipline(t, 3);
    }

    const auto sampled = run_qudit_rsp(a, RunMode::sample(99));
    REQUIRE(sampled.size() == 1);
    CHECK(sampled[0].fidelity >= 1.0 - 1e-12);
    CHECK(sampled[0].total_bits == 6);
}

TEST_CASE("qubit branch replay exposes the pre-correction state") {
    const Angles2 a{0.8, 2.9};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const QubitBranch br = qubit_branch(a, i, j);
            CHECK(std::abs(br.joint_probability - 0.25) < 1e-12);
            REQUIRE_FALSE(br.pre_correction.empty());
            // correcting the replayed state reaches the target exactly
            const UnitaryMatrix m = derive_monomial_correction(br.pre_correction, br.target);
            CHECK(fidelity(apply_local(m, 0, br.pre_correction), br.target) >= 1.0 - 1e-12);
        }
    CHECK_THROWS_AS(qubit_branch(a, 2, 0), std::out_of_range);
}

TEST_CASE("run modes validate their inputs") {
    CHECK_THROWS_AS(run_qubit_rsp({9.0, 0.0}, RunMode::enumerate_all()), std::invalid_argument);
    CHECK_THROWS_AS(run_qudit_rsp(Angles4{0, 0, 0, 0, 0, 7.0}, RunMode::enumerate_all()),
                    std::invalid_argument);
    Angles8 bad;
    bad.thetas.fill(0.0);
    CHECK_THROWS_AS(run_qudit_rsp(bad, RunMode::enumerate_all()), std::invalid_argument);
}
