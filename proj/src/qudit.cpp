#include "rsp/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace rsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

size_t product_of(const std::vector<int>& dims) {
    size_t p = 1;
    for (int d : dims) p *= static_cast<size_t>(d);
    return p;
}

void require_range(double v, double lo, double hi, bool hi_open, const char* name) {
    const bool ok = v >= lo && (hi_open ? v < hi : v <= hi);
    if (!ok)
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) + " out of range");
}

}  // namespace

int PureState::total_dim() const {
    return static_cast<int>(product_of(dims));
}

double PureState::norm() const {
    double n2 = 0.0;
    for (const Complex& a : amps) n2 += std::norm(a);
    return std::sqrt(n2);
}

void validate_angles(const Angles2& a) {
    require_range(a.theta, 0.0, kPi, false, "theta");
    require_range(a.phi, 0.0, kTwoPi, true, "phi");
}

void validate_angles(const Angles4& a) {
    require_range(a.gamma1, 0.0, kPi / 2.0, false, "gamma1");
    require_range(a.gamma2, 0.0, kPi / 2.0, false, "gamma2");
    require_range(a.gamma3, 0.0, kPi / 2.0, false, "gamma3");
    require_range(a.alpha1, 0.0, kTwoPi, true, "alpha1");
    require_range(a.alpha2, 0.0, kTwoPi, true, "alpha2");
    require_range(a.alpha3, 0.0, kTwoPi, true, "alpha3");
}

void validate_angles(const Angles8& a) {
    if (a.phis[0] != 0.0) throw std::invalid_argument("phis[0] must be 0");
    double total = 0.0;
    for (double t : a.thetas) {
        const double c = std::cos(t);
        total += c * c;
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw std::invalid_argument("sum of cos^2(theta_i) = " + std::to_string(total) + ", expected 1");
}

Basis::Basis(int dim, std::vector<std::vector<Complex>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ < 2) throw BasisError("Basis: dimension must be >= 2");
    if (vectors_.size() != static_cast<size_t>(dim_))
        throw BasisError("Basis: expected " + std::to_string(dim_) + " vectors");
    for (const auto& v : vectors_)
        if (v.size() != static_cast<size_t>(dim_))
            throw BasisError("Basis: vector length mismatch");
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            Complex g(0.0, 0.0);
            for (int k = 0; k < dim_; ++k)
                g += std::conj(vectors_[static_cast<size_t>(i)][static_cast<size_t>(k)]) *
                     vectors_[static_cast<size_t>(j)][static_cast<size_t>(k)];
            const double expect = i == j ? 1.0 : 0.0;
            if (std::abs(g - expect) > kCheckTol)
                throw BasisError("Basis: Gram check failed at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "), deviation " + std::to_string(std::abs(g - expect)));
        }
    }
}

PureState make_state(std::vector<int> dims, std::vector<Complex> amps) {
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("make_state: subsystem dimension must be >= 2");
    if (amps.size() != product_of(dims))
        throw std::invalid_argument("make_state: amplitude count does not match dimensions");
    if (amps.empty()) throw std::invalid_argument("make_state: empty amplitude vector");
    double n2 = 0.0;
    for (const Complex& a : amps) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    if (n == 0.0) throw std::invalid_argument("make_state: zero vector");
    if (std::abs(n - 1.0) > kNormTol)
        throw std::invalid_argument("make_state: norm " + std::to_string(n) + " outside tolerance");
    for (Complex& a : amps) a /= n;
    return PureState{std::move(dims), std::move(amps)};
}

PureState from_angles2(const Angles2& a) {
    validate_angles(a);
    const double h = a.theta / 2.0;
    return make_state({2}, {Complex(std::cos(h), 0.0), std::polar(std::sin(h), a.phi)});
}

PureState from_angles4(const Angles4& a) {
    validate_angles(a);
    const double c1 = std::cos(a.gamma1), s1 = std::sin(a.gamma1);
    const double c2 = std::cos(a.gamma2), s2 = std::sin(a.gamma2);
    const double c3 = std::cos(a.gamma3), s3 = std::sin(a.gamma3);
    return make_state({4}, {Complex(c1, 0.0),
                            std::polar(s1 * c2, a.alpha1),
                            std::polar(s1 * s2 * c3, a.alpha2),
                            std::polar(s1 * s2 * s3, a.alpha3)});
}

PureState from_angles8(const Angles8& a) {
    validate_angles(a);
    std::vector<Complex> amps(8);
    for (int i = 0; i < 8; ++i)
        amps[static_cast<size_t>(i)] =
            std::cos(a.thetas[static_cast<size_t>(i)]) *
            std::polar(1.0, a.phis[static_cast<size_t>(i)]);
    return make_state({8}, std::move(amps));
}

PureState ghz(int parties, int d) {
    if (parties < 2) throw std::invalid_argument("ghz: need at least 2 parties");
    if (d < 2) throw std::invalid_argument("ghz: need dimension >= 2");
    std::vector<int> dims(static_cast<size_t>(parties), d);
    std::vector<Complex> amps(product_of(dims), Complex(0.0, 0.0));
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        size_t idx = 0;
        for (int p = 0; p < parties; ++p) idx = idx * static_cast<size_t>(d) + static_cast<size_t>(k);
        amps[idx] = w;
    }
    return make_state(std::move(dims), std::move(amps));
}

PureState ghz_from_bell_cnot() {
    // |0⟩ on particle 1, Bell pair on particles 2 and 3.
    PureState s = tensor(make_state({2}, {1.0, 0.0}), ghz(2, 2));
    // CNOT with particle 2 as control, particle 1 as target: flat index is
    // b0*4 + b1*2 + b2, so flip bit 2 (particle 1) whenever bit 1 is set.
    std::vector<Complex> out(s.amps.size(), Complex(0.0, 0.0));
    for (size_t idx = 0; idx < s.amps.size(); ++idx) {
        const size_t dst = ((idx >> 1) & 1u) ? (idx ^ 4u) : idx;
        out[dst] = s.amps[idx];
    }
    return make_state(s.dims, std::move(out));
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<int> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    std::vector<Complex> amps(a.amps.size() * b.amps.size());
    for (size_t i = 0; i < a.amps.size(); ++i)
        for (size_t j = 0; j < b.amps.size(); ++j)
            amps[i * b.amps.size() + j] = a.amps[i] * b.amps[j];
    return make_state(std::move(dims), std::move(amps));
}

PureState apply_local(const UnitaryMatrix& u, int subsystem, const PureState& s) {
    if (subsystem < 0 || static_cast<size_t>(subsystem) >= s.dims.size())
        throw std::invalid_argument("apply_local: subsystem index out of range");
    const int d = s.dims[static_cast<size_t>(subsystem)];
    if (u.dim() != d) throw std::invalid_argument("apply_local: matrix dimension mismatch");

    size_t post = 1;
    for (size_t m = static_cast<size_t>(subsystem) + 1; m < s.dims.size(); ++m)
        post *= static_cast<size_t>(s.dims[m]);
    const size_t pre = s.amps.size() / (static_cast<size_t>(d) * post);

    std::vector<Complex> out(s.amps.size());
    std::vector<Complex> slice(static_cast<size_t>(d));
    for (size_t a = 0; a < pre; ++a) {
        for (size_t c = 0; c < post; ++c) {
            const size_t base = a * static_cast<size_t>(d) * post + c;
            for (int m = 0; m < d; ++m) slice[static_cast<size_t>(m)] = s.amps[base + static_cast<size_t>(m) * post];
            const std::vector<Complex> rotated = u.apply(slice);
            for (int m = 0; m < d; ++m) out[base + static_cast<size_t>(m) * post] = rotated[static_cast<size_t>(m)];
        }
    }
    return make_state(s.dims, std::move(out));
}

std::vector<OutcomeBranch> measure_branches(const PureState& s, int subsystem, const Basis& b) {
    if (subsystem < 0 || static_cast<size_t>(subsystem) >= s.dims.size())
        throw std::invalid_argument("measure_branches: subsystem index out of range");
    const int d = s.dims[static_cast<size_t>(subsystem)];
    if (b.dim() != d) throw std::invalid_argument("measure_branches: basis dimension mismatch");

    size_t post = 1;
    for (size_t m = static_cast<size_t>(subsystem) + 1; m < s.dims.size(); ++m)
        post *= static_cast<size_t>(s.dims[m]);
    const size_t pre = s.amps.size() / (static_cast<size_t>(d) * post);

    std::vector<int> rdims;
    for (size_t m = 0; m < s.dims.size(); ++m)
        if (m != static_cast<size_t>(subsystem)) rdims.push_back(s.dims[m]);

    std::vector<OutcomeBranch> branches;
    branches.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        const std::vector<Complex>& v = b.vector(j);
        std::vector<Complex> proj(pre * post, Complex(0.0, 0.0));
        double p = 0.0;
        for (size_t a = 0; a < pre; ++a) {
            for (size_t c = 0; c < post; ++c) {
                Complex acc(0.0, 0.0);
                const size_t base = a * static_cast<size_t>(d) * post + c;
                for (int m = 0; m < d; ++m)
                    acc += std::conj(v[static_cast<size_t>(m)]) * s.amps[base + static_cast<size_t>(m) * post];
                proj[a * post + c] = acc;
                p += std::norm(acc);
            }
        }
        OutcomeBranch br;
        br.outcome = j;
        br.probability = p;
        if (p < kDegenerateProb) {
            br.degenerate = true;
        } else {
            const double scale = 1.0 / std::sqrt(p);
            for (Complex& z : proj) z *= scale;
            // measuring the last subsystem leaves a scalar residue (dims = {})
            br.collapsed = make_state(rdims, std::move(proj));
        }
        branches.push_back(std::move(br));
    }
    return branches;
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.amps.size() != b.amps.size())
        throw std::invalid_argument("fidelity: total dimension mismatch");
    Complex overlap(0.0, 0.0);
    for (size_t k = 0; k < a.amps.size(); ++k) overlap += std::conj(a.amps[k]) * b.amps[k];
    return std::min(1.0, std::norm(overlap));
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol) {
    return fidelity(a, b) >= 1.0 - tol;
}

}  // namespace rsp
