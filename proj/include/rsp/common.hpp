/*
 * Shared numeric conventions for the RSP simulator.
 *
 * All states and matrices are dense, double-precision complex. The
 * tolerances below form the numeric contract used across the library:
 * construction-time norms may be off by kNormTol and are renormalized;
 * algebraic identities (unitarity, orthonormality, fidelity-1 delivery)
 * are enforced at kCheckTol; measurement branches below kDegenerateProb
 * carry no collapsed state; monomial-correction synthesis matches
 * amplitude magnitudes at kMagnitudeTol.
 */
#pragma once

#include <complex>
#include <stdexcept>

namespace rsp {

using Complex = std::complex<double>;

inline constexpr double kNormTol = 1e-9;
inline constexpr double kCheckTol = 1e-12;
inline constexpr double kDegenerateProb = 1e-14;
inline constexpr double kMagnitudeTol = 1e-10;

/// A requested basis fails its orthonormality check.
struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No phased permutation can map the collapsed state to the target.
struct NoMonomialCorrection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A protocol stage cannot be constructed (d=8 magnitude stage gate).
struct ProtocolUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rsp
