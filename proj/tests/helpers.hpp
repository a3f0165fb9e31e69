/*
 * Shared test utilities: closeness checks for amplitude vectors, plus
 * seeded generators for random states, orthonormal bases, and monomial
 * matrices. Generators use the library's platform-stable uniform helper.
 */
#pragma once

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "rsp/qudit.hpp"
#include "rsp/rng.hpp"
#include "rsp/unitary.hpp"

namespace test {

inline double max_amp_diff(const std::vector<rsp::Complex>& a, const std::vector<rsp::Complex>& b) {
    if (a.size() != b.size()) return 1e9;
    double worst = 0.0;
    for (size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

inline double max_amp_diff(const rsp::PureState& a, const std::vector<rsp::Complex>& b) {
    return max_amp_diff(a.amps, b);
}

inline double max_amp_diff(const rsp::PureState& a, const rsp::PureState& b) {
    return max_amp_diff(a.amps, b.amps);
}

inline rsp::Complex random_complex(std::mt19937_64& g) {
    return rsp::Complex(rsp::uniform_in(g, -1.0, 1.0), rsp::uniform_in(g, -1.0, 1.0));
}

inline rsp::PureState random_state(std::vector<int> dims, std::mt19937_64& g) {
    size_t n = 1;
    for (int d : dims) n *= static_cast<size_t>(d);
    std::vector<rsp::Complex> amps(n);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& z : amps) {
            z = random_complex(g);
            n2 += std::norm(z);
        }
    } while (n2 < 1e-6);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : amps) z *= inv;
    return rsp::make_state(std::move(dims), std::move(amps));
}

/// Gram-Schmidt with one re-orthogonalization pass.
inline rsp::Basis random_orthonormal_basis(int d, std::mt19937_64& g) {
    std::vector<std::vector<rsp::Complex>> vecs(static_cast<size_t>(d),
                                                std::vector<rsp::Complex>(static_cast<size_t>(d)));
    for (auto& v : vecs)
        for (auto& z : v) z = random_complex(g);
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < d; ++i) {
            auto& vi = vecs[static_cast<size_t>(i)];
            for (int j = 0; j < i; ++j) {
                const auto& vj = vecs[static_cast<size_t>(j)];
                rsp::Complex overlap(0.0, 0.0);
                for (int k = 0; k < d; ++k)
                    overlap += std::conj(vj[static_cast<size_t>(k)]) * vi[static_cast<size_t>(k)];
                for (int k = 0; k < d; ++k) vi[static_cast<size_t>(k)] -= overlap * vj[static_cast<size_t>(k)];
            }
            double n2 = 0.0;
            for (const auto& z : vi) n2 += std::norm(z);
            const double inv = 1.0 / std::sqrt(n2);
            for (auto& z : vi) z *= inv;
        }
    }
    return rsp::Basis(d, std::move(vecs));
}

inline rsp::UnitaryMatrix random_unitary(int d, std::mt19937_64& g) {
    const rsp::Basis b = random_orthonormal_basis(d, g);
    std::vector<rsp::Complex> entries;
    entries.reserve(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) entries.push_back(b.vector(r)[static_cast<size_t>(c)]);
    return rsp::UnitaryMatrix(d, std::move(entries));
}

/// Random phased permutation: Fisher-Yates permutation, unit-modulus phases.
inline rsp::UnitaryMatrix random_monomial(int d, std::mt19937_64& g) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i) {
        const int j = static_cast<int>(rsp::uniform01(g) * (i + 1));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<rsp::Complex> entries(static_cast<size_t>(d) * static_cast<size_t>(d),
                                      rsp::Complex(0.0, 0.0));
    for (int c = 0; c < d; ++c) {
        const int r = perm[static_cast<size_t>(c)];
        entries[static_cast<size_t>(r) * static_cast<size_t>(d) + static_cast<size_t>(c)] =
            std::polar(1.0, rsp::uniform_in(g, 0.0, 6.283185307179586));
    }
    return rsp::UnitaryMatrix(d, std::move(entries));
}

}  // namespace test
