#include "rsp/bases.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rsp/rng.hpp"

namespace rsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/*
 * Unit-octonion multiplication table, e_i * e_j = sign * e_index, generated
 * by Cayley–Dickson doubling of the quaternions with
 * (a,b)(c,d) = (ac - d̄b, da + bc̄). Stored as data; the test suite rebuilds
 * it independently from the doubling formula and cross-checks every cell.
 */
struct Cell {
    int index;
    int sign;
};
constexpr Cell kOctonionTable[8][8] = {
    {{0, +1}, {1, +1}, {2, +1}, {3, +1}, {4, +1}, {5, +1}, {6, +1}, {7, +1}},
    {{1, +1}, {0, -1}, {3, +1}, {2, -1}, {5, +1}, {4, -1}, {7, -1}, {6, +1}},
    {{2, +1}, {3, -1}, {0, -1}, {1, +1}, {6, +1}, {7, +1}, {4, -1}, {5, -1}},
    {{3, +1}, {2, +1}, {1, -1}, {0, -1}, {7, +1}, {6, -1}, {5, +1}, {4, -1}},
    {{4, +1}, {5, -1}, {6, -1}, {7, -1}, {0, -1}, {1, +1}, {2, +1}, {3, +1}},
    {{5, +1}, {4, +1}, {7, -1}, {6, +1}, {1, -1}, {0, -1}, {3, -1}, {2, +1}},
    {{6, +1}, {7, +1}, {4, +1}, {5, -1}, {2, -1}, {3, +1}, {0, -1}, {1, -1}},
    {{7, +1}, {6, -1}, {5, +1}, {4, +1}, {3, -1}, {2, -1}, {1, +1}, {0, -1}},
};

/// Row powers of ω = e^{2πi/d} used by the phase-stage basis; the d=4 order
/// (0,1,3,2) is what the tabulated corrections are indexed by.
const std::vector<int>& phase_row_powers(int d) {
    static const std::vector<int> p2 = {0, 1};
    static const std::vector<int> p4 = {0, 1, 3, 2};
    static const std::vector<int> p8 = {0, 1, 2, 3, 4, 5, 6, 7};
    switch (d) {
        case 2: return p2;
        case 4: return p4;
        case 8: return p8;
        default: throw std::invalid_argument("phase_basis: unsupported dimension " + std::to_string(d));
    }
}

/// e^{2πi m/d} with quarter turns kept exact, so that ±1 and ±i row factors
/// multiply without rounding.
Complex unit_root(int d, int m) {
    m %= d;
    if (m < 0) m += d;
    const int q = m * 4;
    if (q % d == 0) {
        switch (q / d) {
            case 0: return Complex(1.0, 0.0);
            case 1: return Complex(0.0, 1.0);
            case 2: return Complex(-1.0, 0.0);
            default: return Complex(0.0, -1.0);
        }
    }
    const double ang = kTwoPi * m / d;
    return Complex(std::cos(ang), std::sin(ang));
}

}  // namespace

SignedIndex octonion_unit_product(int i, int j) {
    if (i < 0 || i > 7 || j < 0 || j > 7)
        throw std::invalid_argument("octonion_unit_product: index out of range");
    const Cell c = kOctonionTable[i][j];
    return SignedIndex{c.index, c.sign};
}

Basis alice_basis_d2(double theta) {
    if (theta < 0.0 || theta > kPi)
        throw std::invalid_argument("alice_basis_d2: theta out of range");
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return Basis(2, {{Complex(c, 0.0), Complex(s, 0.0)},
                     {Complex(s, 0.0), Complex(-c, 0.0)}});
}

Basis alice_basis_d4(double gamma1, double gamma2, double gamma3) {
    for (double g : {gamma1, gamma2, gamma3})
        if (g < 0.0 || g > kPi / 2.0)
            throw std::invalid_argument("alice_basis_d4: gamma out of range");
    const double a = std::cos(gamma1);
    const double b = std::sin(gamma1) * std::cos(gamma2);
    const double c = std::sin(gamma1) * std::sin(gamma2) * std::cos(gamma3);
    const double d = std::sin(gamma1) * std::sin(gamma2) * std::sin(gamma3);
    auto row = [](double x0, double x1, double x2, double x3) {
        return std::vector<Complex>{Complex(x0, 0.0), Complex(x1, 0.0), Complex(x2, 0.0), Complex(x3, 0.0)};
    };
    return Basis(4, {row(a, b, c, d),
                     row(-b, a, -d, c),
                     row(-c, d, a, -b),
                     row(d, c, -b, -a)});
}

Basis alice_basis_d8(const std::array<double, 8>& thetas) {
    std::array<double, 8> x{};
    double n2 = 0.0;
    for (int i = 0; i < 8; ++i) {
        x[static_cast<size_t>(i)] = std::cos(thetas[static_cast<size_t>(i)]);
        n2 += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    }
    if (std::abs(n2 - 1.0) > kNormTol)
        throw std::invalid_argument("alice_basis_d8: sum of cos^2(theta_i) not 1");
    const double inv = 1.0 / std::sqrt(n2);
    for (double& v : x) v *= inv;

    std::vector<std::vector<Complex>> rows(8, std::vector<Complex>(8, Complex(0.0, 0.0)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const Cell cell = kOctonionTable[i][j];
            rows[static_cast<size_t>(i)][static_cast<size_t>(cell.index)] =
                Complex(cell.sign * x[static_cast<size_t>(j)], 0.0);
        }
    return Basis(8, std::move(rows));  // Basis ctor is the orthonormality gate
}

Basis phase_basis(int d, const std::vector<double>& phases) {
    const std::vector<int>& powers = phase_row_powers(d);
    if (phases.size() != static_cast<size_t>(d))
        throw std::invalid_argument("phase_basis: expected " + std::to_string(d) + " phases");
    if (phases[0] != 0.0) throw std::invalid_argument("phase_basis: phases[0] must be 0");

    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> dressed(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) dressed[static_cast<size_t>(k)] = std::polar(w, -phases[static_cast<size_t>(k)]);

    std::vector<std::vector<Complex>> rows(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::vector<Complex> row(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k)
            row[static_cast<size_t>(k)] =
                unit_root(d, powers[static_cast<size_t>(j)] * k) * dressed[static_cast<size_t>(k)];
        rows[static_cast<size_t>(j)] = std::move(row);
    }
    return Basis(d, std::move(rows));
}

Basis xi_basis(double phi) {
    if (phi < 0.0 || phi >= kTwoPi)
        throw std::invalid_argument("xi_basis: phi out of range");
    const Complex e = std::polar(1.0 / std::sqrt(2.0), -phi);
    const Complex h(1.0 / std::sqrt(2.0), 0.0);
    return Basis(2, {{e, h}, {-e, h}});
}

bool BasisCheckReport::phase_stage_ok() const {
    for (const auto& l : lines)
        if (l.name.rfind("phase", 0) == 0) return l.available && l.ok;
    return false;
}

bool BasisCheckReport::theta_stage_ok() const {
    for (const auto& l : lines)
        if (l.name.rfind("magnitude", 0) == 0) return l.available && l.ok;
    return false;
}

bool BasisCheckReport::all_ok() const {
    for (const auto& l : lines)
        if (l.available && !l.ok) return false;
    return true;
}

namespace {

double gram_deviation(const Basis& b) {
    double worst = 0.0;
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            Complex g(0.0, 0.0);
            for (int k = 0; k < b.dim(); ++k)
                g += std::conj(b.vector(i)[static_cast<size_t>(k)]) * b.vector(j)[static_cast<size_t>(k)];
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

/// U·Uᵀ deviation for a real basis arranged as rows.
double real_orthogonality_deviation(const Basis& b) {
    double worst = 0.0;
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            double g = 0.0;
            for (int k = 0; k < b.dim(); ++k)
                g += b.vector(i)[static_cast<size_t>(k)].real() * b.vector(j)[static_cast<size_t>(k)].real();
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

std::vector<double> random_phase_vector(int d, std::mt19937_64& g) {
    std::vector<double> phases(static_cast<size_t>(d), 0.0);
    for (int k = 1; k < d; ++k) phases[static_cast<size_t>(k)] = uniform_in(g, 0.0, kTwoPi);
    return phases;
}

}  // namespace

BasisCheckReport check_basis_properties(int d, int samples, std::uint64_t seed) {
    if (d != 2 && d != 4 && d != 8)
        throw std::invalid_argument("check_basis_properties: unsupported dimension");
    if (samples < 1) throw std::invalid_argument("check_basis_properties: samples must be >= 1");

    BasisCheckReport report;
    report.d = d;
    report.samples = samples;
    report.seed = seed;
    std::mt19937_64 g(seed);

    BasisCheckLine magnitude{"magnitude-stage basis", true, true, 0.0};
    BasisCheckLine phase{"phase-stage basis", true, true, 0.0};
    BasisCheckLine xi{"xi basis", true, true, 0.0};
    BasisCheckLine real_orth{"magnitude-stage real orthogonality", true, true, 0.0};

    for (int s = 0; s < samples; ++s) {
        try {
            Basis mb = d == 2   ? alice_basis_d2(uniform_in(g, 0.0, kPi))
                       : d == 4 ? alice_basis_d4(uniform_in(g, 0.0, kPi / 2.0),
                                                 uniform_in(g, 0.0, kPi / 2.0),
                                                 uniform_in(g, 0.0, kPi / 2.0))
                                : alice_basis_d8(random_angles8(g).thetas);
            magnitude.max_deviation = std::max(magnitude.max_deviation, gram_deviation(mb));
            if (d == 4)
                real_orth.max_deviation = std::max(real_orth.max_deviation, real_orthogonality_deviation(mb));
        } catch (const BasisError&) {
            magnitude.available = false;
        } catch (const std::invalid_argument&) {
            magnitude.available = false;
        }

        Basis pb = phase_basis(d, random_phase_vector(d, g));
        phase.max_deviation = std::max(phase.max_deviation, gram_deviation(pb));

        if (d == 2) {
            Basis xb = xi_basis(uniform_in(g, 0.0, kTwoPi));
            xi.max_deviation = std::max(xi.max_deviation, gram_deviation(xb));
        }
    }

    magnitude.ok = magnitude.available && magnitude.max_deviation <= kCheckTol;
    phase.ok = phase.max_deviation <= kCheckTol;
    xi.ok = xi.max_deviation <= kCheckTol;
    real_orth.ok = real_orth.max_deviation <= kCheckTol;

    report.lines.push_back(magnitude);
    report.lines.push_back(phase);
    if (d == 2) report.lines.push_back(xi);
    if (d == 4) report.lines.push_back(real_orth);
    return report;
}

}  // namespace rsp
