/*
 * Measurement-basis constructors for the two protocol stages.
 *
 * Magnitude stage (sender): real orthogonal bases whose first vector carries
 * the target's amplitude magnitudes — the rotated qubit basis (d=2), the
 * quaternion-patterned basis (d=4), and an octonion-patterned extension (d=8).
 * Phase stage: roots-of-unity rows dressed with the target phases e^{-iφ_k},
 * plus the swapped variant used after the orthogonal qubit outcome.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rsp/qudit.hpp"

namespace rsp {

/// {(cos(θ/2), sin(θ/2)), (sin(θ/2), -cos(θ/2))}
Basis alice_basis_d2(double theta);

/// Four real rows generated from the magnitudes (cosγ1, sinγ1 cosγ2, ...) by
/// the fixed signed-permutation pattern; row 0 is the magnitude vector itself.
Basis alice_basis_d4(double gamma1, double gamma2, double gamma3);

/// Octonion-patterned extension: row i is the unit-octonion product e_i · x
/// where x = (cosθ_0, ..., cosθ_7), renormalized. Throws BasisError if the
/// pattern fails the Gram check for the given input.
Basis alice_basis_d8(const std::array<double, 8>& thetas);

/// Row j = (1/√d) Σ_k ω^{p_j k} e^{-i phases[k]} |k⟩ with ω = e^{2πi/d}.
/// Row powers p_j are (0,1) for d=2, (0,1,3,2) for d=4 — the order the
/// correction tables are indexed by — and (0..7) for d=8.
Basis phase_basis(int d, const std::vector<double>& phases);

/// {(|1⟩ + e^{-iφ}|0⟩)/√2, (|1⟩ - e^{-iφ}|0⟩)/√2}; equals σ_x · phase_basis(2, {0, φ}).
Basis xi_basis(double phi);

/// e_i · e_j = sign · e_index in the octonion unit table (Cayley–Dickson build).
struct SignedIndex {
    int index;
    int sign;
};
SignedIndex octonion_unit_product(int i, int j);

struct BasisCheckLine {
    std::string name;
    bool available = true;  // false when construction itself failed
    bool ok = false;
    double max_deviation = 0.0;
};

struct BasisCheckReport {
    int d = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<BasisCheckLine> lines;

    bool phase_stage_ok() const;
    bool theta_stage_ok() const;
    bool all_ok() const;  // every available line passed
};

/// Orthonormality/unitarity property sweep over seeded random parameters.
BasisCheckReport check_basis_properties(int d, int samples, std::uint64_t seed);

}  // namespace rsp
