#include "rsp/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rsp/bases.hpp"

namespace rsp {

namespace {

const Complex kI(0.0, 1.0);

UnitaryMatrix from_rows(int d, std::initializer_list<Complex> rows) {
    return UnitaryMatrix(d, std::vector<Complex>(rows));
}

}  // namespace

UnitaryMatrix qubit_correction_table(int a_out, int b_out) {
    if (a_out < 0 || a_out > 1 || b_out < 0 || b_out > 1)
        throw std::out_of_range("qubit_correction_table: outcome out of range");
    if (a_out == 0) return b_out == 0 ? UnitaryMatrix::identity(2) : UnitaryMatrix::sigma_z();
    // swap-basis rows: σ_z σ_x for (1,0), with σ_x acting first
    return b_out == 0 ? UnitaryMatrix::sigma_z() * UnitaryMatrix::sigma_x() : UnitaryMatrix::sigma_x();
}

UnitaryMatrix bob_intermediate_unitary(int a_out) {
    switch (a_out) {
        case 0:
            return UnitaryMatrix::identity(4);
        case 1:
            return from_rows(4, {0, 1, 0, 0,
                                 -1, 0, 0, 0,
                                 0, 0, 0, 1,
                                 0, 0, -1, 0});
        case 2:
            return from_rows(4, {0, 0, 1, 0,
                                 0, 0, 0, -1,
                                 -1, 0, 0, 0,
                                 0, 1, 0, 0});
        case 3:
            return from_rows(4, {0, 0, 0, -1,
                                 0, 0, -1, 0,
                                 0, 1, 0, 0,
                                 1, 0, 0, 0});
        default:
            throw std::out_of_range("bob_intermediate_unitary: outcome out of range");
    }
}

UnitaryMatrix bob_intermediate_unitary_d8(int a_out) {
    if (a_out < 0 || a_out > 7)
        throw std::out_of_range("bob_intermediate_unitary_d8: outcome out of range");
    // Row a of the octonion pattern stores magnitude j at slot m with sign s;
    // the intermediate unitary undoes that: |m⟩ → s|j⟩.
    std::vector<Complex> entries(64, Complex(0.0, 0.0));
    for (int j = 0; j < 8; ++j) {
        const SignedIndex sp = octonion_unit_product(a_out, j);
        entries[static_cast<size_t>(j) * 8 + static_cast<size_t>(sp.index)] = Complex(sp.sign, 0.0);
    }
    return UnitaryMatrix(8, std::move(entries));
}

UnitaryMatrix charlie_correction_table(int a_out, int b_out) {
    if (a_out < 0 || a_out > 3 || b_out < 0 || b_out > 3)
        throw std::out_of_range("charlie_correction_table: outcome out of range");
    switch (a_out) {
        case 0:
            switch (b_out) {
                case 0: return UnitaryMatrix::identity(4);
                case 1: return from_rows(4, {1, 0, 0, 0, 0, kI, 0, 0, 0, 0, -1, 0, 0, 0, 0, -kI});
                case 2: return from_rows(4, {1, 0, 0, 0, 0, -kI, 0, 0, 0, 0, -1, 0, 0, 0, 0, kI});
                default: return from_rows(4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
            }
        case 1:
            switch (b_out) {
                case 0: return from_rows(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
                case 1: return from_rows(4, {0, 1, 0, 0, kI, 0, 0, 0, 0, 0, 0, -1, 0, 0, -kI, 0});
                case 2: return from_rows(4, {0, 1, 0, 0, -kI, 0, 0, 0, 0, 0, 0, -1, 0, 0, kI, 0});
                default: return from_rows(4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
            }
        case 2:
            // block form [[0, A], [±A, 0]] with diagonal A
            switch (b_out) {
                case 0: return from_rows(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
                case 1: return from_rows(4, {0, 0, 1, 0, 0, 0, 0, kI, -1, 0, 0, 0, 0, -kI, 0, 0});
                case 2: return from_rows(4, {0, 0, 1, 0, 0, 0, 0, -kI, -1, 0, 0, 0, 0, kI, 0, 0});
                default: return from_rows(4, {0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0});
            }
        default:
            // block form [[0, A], [±A, 0]] with antidiagonal A
            switch (b_out) {
                case 0: return from_rows(4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
                case 1: return from_rows(4, {0, 0, 0, 1, 0, 0, kI, 0, 0, -1, 0, 0, -kI, 0, 0, 0});
                case 2: return from_rows(4, {0, 0, 0, 1, 0, 0, -kI, 0, 0, -1, 0, 0, kI, 0, 0, 0});
                default: return from_rows(4, {0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
            }
    }
}

UnitaryMatrix derive_monomial_correction(const PureState& collapsed, const PureState& target) {
    if (collapsed.amps.size() != target.amps.size())
        throw std::invalid_argument("derive_monomial_correction: dimension mismatch");
    const int d = static_cast<int>(collapsed.amps.size());

    // Stable magnitude matching: sort both index sets by (magnitude, index)
    // and pair rank for rank. Ties resolve lowest index first.
    std::vector<int> by_mag_c(static_cast<size_t>(d)), by_mag_t(static_cast<size_t>(d));
    std::iota(by_mag_c.begin(), by_mag_c.end(), 0);
    std::iota(by_mag_t.begin(), by_mag_t.end(), 0);
    auto order = [](const std::vector<Complex>& amps) {
        return [&amps](int lhs, int rhs) {
            const double ml = std::abs(amps[static_cast<size_t>(lhs)]);
            const double mr = std::abs(amps[static_cast<size_t>(rhs)]);
            if (ml != mr) return ml < mr;
            return lhs < rhs;
        };
    };
    std::sort(by_mag_c.begin(), by_mag_c.end(), order(collapsed.amps));
    std::sort(by_mag_t.begin(), by_mag_t.end(), order(target.amps));

    for (int r = 0; r < d; ++r) {
        const double mc = std::abs(collapsed.amps[static_cast<size_t>(by_mag_c[static_cast<size_t>(r)])]);
        const double mt = std::abs(target.amps[static_cast<size_t>(by_mag_t[static_cast<size_t>(r)])]);
        if (std::abs(mc - mt) > kMagnitudeTol)
            throw NoMonomialCorrection("amplitude magnitude multisets differ at rank " + std::to_string(r));
    }

    std::vector<Complex> entries(static_cast<size_t>(d) * static_cast<size_t>(d), Complex(0.0, 0.0));
    for (int r = 0; r < d; ++r) {
        const int src = by_mag_c[static_cast<size_t>(r)];
        const int dst = by_mag_t[static_cast<size_t>(r)];
        const Complex c = collapsed.amps[static_cast<size_t>(src)];
        const Complex t = target.amps[static_cast<size_t>(dst)];
        Complex entry(1.0, 0.0);
        if (std::abs(c) > kMagnitudeTol && std::abs(t) > kMagnitudeTol) {
            const Complex ratio = t / c;
            entry = ratio / std::abs(ratio);  // unit modulus keeps the matrix exactly unitary
        }
        entries[static_cast<size_t>(dst) * static_cast<size_t>(d) + static_cast<size_t>(src)] = entry;
    }
    return UnitaryMatrix(d, std::move(entries));
}

}  // namespace rsp
