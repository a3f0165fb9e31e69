#include "rsp/unitary.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace rsp {

UnitaryMatrix::UnitaryMatrix(int dim, std::vector<Complex> row_major_entries)
    : dim_(dim), entries_(std::move(row_major_entries)) {
    if (dim_ < 0) throw std::invalid_argument("UnitaryMatrix: negative dimension");
    if (entries_.size() != static_cast<size_t>(dim_) * static_cast<size_t>(dim_))
        throw std::invalid_argument("UnitaryMatrix: entry count does not match dimension");
    const double defect = unitarity_defect();
    if (defect > kCheckTol)
        throw std::invalid_argument("UnitaryMatrix: not unitary (defect " + std::to_string(defect) + ")");
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
    std::vector<Complex> e(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
    for (int i = 0; i < dim; ++i) e[static_cast<size_t>(i) * dim + i] = 1.0;
    return UnitaryMatrix(dim, std::move(e));
}

UnitaryMatrix UnitaryMatrix::sigma_x() {
    return UnitaryMatrix(2, {0.0, 1.0, 1.0, 0.0});
}

UnitaryMatrix UnitaryMatrix::sigma_z() {
    return UnitaryMatrix(2, {1.0, 0.0, 0.0, -1.0});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            e[static_cast<size_t>(c) * dim_ + r] = std::conj(at(r, c));
    return UnitaryMatrix(dim_, std::move(e));
}

std::vector<Complex> UnitaryMatrix::apply(const std::vector<Complex>& v) const {
    if (v.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("UnitaryMatrix::apply: vector length mismatch");
    std::vector<Complex> out(v.size(), Complex(0.0, 0.0));
    for (int r = 0; r < dim_; ++r) {
        Complex acc(0.0, 0.0);
        for (int c = 0; c < dim_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

bool UnitaryMatrix::is_monomial(double tol) const {
    for (int r = 0; r < dim_; ++r) {
        int hits = 0;
        for (int c = 0; c < dim_; ++c) {
            const double m = std::abs(at(r, c));
            if (m > tol) {
                if (std::abs(m - 1.0) > tol) return false;
                ++hits;
            }
        }
        if (hits != 1) return false;
    }
    for (int c = 0; c < dim_; ++c) {
        int hits = 0;
        for (int r = 0; r < dim_; ++r)
            if (std::abs(at(r, c)) > tol) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

double UnitaryMatrix::unitarity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < dim_; ++k) acc += at(r, k) * std::conj(at(c, k));
            const double expect = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - expect));
        }
    }
    return worst;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("UnitaryMatrix: product dimension mismatch");
    const int d = a.dim_;
    std::vector<Complex> e(static_cast<size_t>(d) * d, Complex(0.0, 0.0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < d; ++k) acc += a.at(r, k) * b.at(k, c);
            e[static_cast<size_t>(r) * d + c] = acc;
        }
    return UnitaryMatrix(d, std::move(e));
}

}  // namespace rsp
