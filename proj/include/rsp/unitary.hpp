#pragma once

#include <vector>

#include "rsp/common.hpp"

namespace rsp {

/*
 * Dense d x d complex matrix, verified unitary at construction
 * (max |UU† - I| entry <= kCheckTol). Immutable afterwards.
 */
class UnitaryMatrix {
public:
    UnitaryMatrix() = default;  // dim-0 placeholder, inert
    UnitaryMatrix(int dim, std::vector<Complex> row_major_entries);

    static UnitaryMatrix identity(int dim);
    static UnitaryMatrix sigma_x();
    static UnitaryMatrix sigma_z();

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }
    const Complex& at(int row, int col) const { return entries_[static_cast<size_t>(row) * dim_ + col]; }
    const std::vector<Complex>& entries() const { return entries_; }

    UnitaryMatrix adjoint() const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    /// Exactly one unit-modulus entry per row and column, rest ~0.
    bool is_monomial(double tol = kCheckTol) const;
    /// max |{UU†}_ij - δ_ij|
    double unitarity_defect() const;

    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

}  // namespace rsp
