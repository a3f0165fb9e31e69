/*
 * Exact dense state-vector core for composite qudit registers:
 * state construction from protocol angle parameterizations, GHZ channels,
 * local unitaries, projective measurement in arbitrary orthonormal bases,
 * and phase-invariant state comparison.
 */
#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "rsp/common.hpp"
#include "rsp/unitary.hpp"

namespace rsp {

/*
 * Normalized complex amplitude vector over a composite register.
 * Subsystem 0 is the most significant digit of the flattened index,
 * matching left-to-right ket order. amps.size() == product(dims).
 */
struct PureState {
    std::vector<int> dims;
    std::vector<Complex> amps;

    int total_dim() const;
    double norm() const;
    bool empty() const { return amps.empty(); }
};

/// Bloch angles of a qubit: amplitudes (cos(θ/2), sin(θ/2) e^{iφ}).
struct Angles2 {
    double theta = 0.0;  // [0, π]
    double phi = 0.0;    // [0, 2π)
};

/// Six-angle parameterization of a 4-level state (three magnitudes, three phases).
struct Angles4 {
    double gamma1 = 0.0, gamma2 = 0.0, gamma3 = 0.0;  // each in [0, π/2]
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;  // each in [0, 2π)
};

/// Eight-level state: amplitudes cosθ_i e^{iφ_i}, Σ cos²θ_i = 1, φ_0 = 0.
struct Angles8 {
    std::array<double, 8> thetas{};
    std::array<double, 8> phis{};
};

using AnglesVariant = std::variant<Angles2, Angles4, Angles8>;

void validate_angles(const Angles2& a);  // throws std::invalid_argument
void validate_angles(const Angles4& a);
void validate_angles(const Angles8& a);

/*
 * Ordered orthonormal set of dim measurement vectors for one subsystem.
 * The Gram identity (|⟨v_i|v_j⟩ - δ_ij| <= kCheckTol) is enforced at
 * construction; a failure throws BasisError.
 */
class Basis {
public:
    Basis(int dim, std::vector<std::vector<Complex>> vectors);

    int dim() const { return dim_; }
    const std::vector<Complex>& vector(int j) const { return vectors_[static_cast<size_t>(j)]; }
    const std::vector<std::vector<Complex>>& vectors() const { return vectors_; }

private:
    int dim_ = 0;
    std::vector<std::vector<Complex>> vectors_;
};

/// One measurement outcome. collapsed is empty when degenerate.
struct OutcomeBranch {
    int outcome = 0;
    double probability = 0.0;
    PureState collapsed;
    bool degenerate = false;
};

PureState make_state(std::vector<int> dims, std::vector<Complex> amps);
PureState from_angles2(const Angles2& a);
PureState from_angles4(const Angles4& a);
PureState from_angles8(const Angles8& a);

/// (1/√d) Σ_k |k⟩^{⊗parties}
PureState ghz(int parties, int d);

/// |0⟩ ⊗ Bell pair, then CNOT (control = particle 2, target = particle 1).
PureState ghz_from_bell_cnot();

PureState tensor(const PureState& a, const PureState& b);
PureState apply_local(const UnitaryMatrix& u, int subsystem, const PureState& s);

/// One branch per basis vector; probabilities sum to 1; collapsed states normalized.
std::vector<OutcomeBranch> measure_branches(const PureState& s, int subsystem, const Basis& b);

/// |⟨a|b⟩|²
double fidelity(const PureState& a, const PureState& b);
bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol = kCheckTol);

}  // namespace rsp
