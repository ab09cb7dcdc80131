// Copyright 2026 The qac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small dense complex linear algebra (dimensions up to a few dozen).
//
// Basis convention for multi-qubit registers: the left tensor factor is the
// most significant, so |q1 q2 ... qk> has index sum_i q_i * 2^(k-i).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qac {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double kStructural = 1e-10;
inline constexpr double kExact = 1e-12;
}  // namespace tol

class CVector {
   public:
    CVector() = default;
    explicit CVector(std::size_t dim) : data_(dim, cplx{0.0, 0.0}) {}
    CVector(std::initializer_list<cplx> entries) : data_(entries) {}
    explicit CVector(std::vector<cplx> entries) : data_(std::move(entries)) {}

    /// Computational basis ket |index> in `dim` dimensions.
    static CVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return data_.size(); }
    cplx &operator[](std::size_t i) { return data_[i]; }
    const cplx &operator[](std::size_t i) const { return data_[i]; }
    std::span<const cplx> entries() const { return data_; }
    std::span<cplx> entries() { return data_; }

    double norm() const;
    CVector normalized() const;
    CVector conj() const;

    CVector &operator+=(const CVector &o);
    CVector &operator-=(const CVector &o);
    CVector &operator*=(cplx s);

    friend CVector operator+(CVector a, const CVector &b) { return a += b; }
    friend CVector operator-(CVector a, const CVector &b) { return a -= b; }
    friend CVector operator*(cplx s, CVector v) { return v *= s; }
    friend CVector operator*(CVector v, cplx s) { return v *= s; }

   private:
    std::vector<cplx> data_;
};

class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const double> d);
    /// |v><v|
    static CMatrix projector(const CVector &v);
    /// |a><b|
    static CMatrix outer(const CVector &a, const CVector &b);
    /// Column-stacking of equal-length vectors.
    static CMatrix from_columns(std::span<const CVector> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const cplx> entries() const { return data_; }

    CVector column(std::size_t c) const;
    void set_column(std::size_t c, const CVector &v);

    CMatrix adjoint() const;
    cplx trace() const;
    /// Largest entry modulus.
    double max_abs() const;
    bool is_hermitian(double tolerance = tol::kStructural) const;

    CMatrix &operator+=(const CMatrix &o);
    CMatrix &operator-=(const CMatrix &o);
    CMatrix &operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
    friend CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CVector operator*(const CMatrix &a, const CVector &v);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// <a|b> (conjugate-linear in the first argument).
cplx inner(const CVector &a, const CVector &b);

/// Max-norm distance, ||a - b||_inf over entries.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
double max_abs_diff(const CVector &a, const CVector &b);

/// Kronecker product, `a` is the high-order factor.
CVector tensor(const CVector &a, const CVector &b);
CMatrix tensor(const CMatrix &a, const CMatrix &b);

/// Reduce `rho` (over factors of sizes `dims`) onto the factors listed in
/// `keep`. The output orders kept factors as they appear in `dims`.
/// Throws InputError on dimension mismatch or an empty/out-of-range keep set.
CMatrix partial_trace(const CMatrix &rho, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep);

/// Gram matrix G_ij = <v_i|v_j>.
CMatrix gram(std::span<const CVector> vs);

/// ||V^dagger V - I||_inf
double isometry_defect(const CMatrix &v);

struct EigenSystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws InputError on non-Hermitian input.
EigenSystem hermitian_eigensystem(const CMatrix &h, double hermitian_tol = tol::kStructural);
std::vector<double> hermitian_eigenvalues(const CMatrix &h, double hermitian_tol = tol::kStructural);

/// Returns `dim` orthonormal vectors: `vs` orthonormalized in order (modified
/// Gram-Schmidt, one re-orthogonalization pass), then completed from
/// computational basis vectors taken in index order.
/// Throws RankError when an input is dependent on its predecessors.
std::vector<CVector> orthonormal_complete(std::span<const CVector> vs, std::size_t dim,
                                          double rank_tol = tol::kStructural);

/// Unitary U with U inputs[i] = images[i]. Requires matching Gram matrices
/// (InfeasibleError otherwise). Dependent inputs are allowed when the images
/// are dependent in the same way; any other rank disagreement is a RankError.
CMatrix unitary_from_correspondence(std::span<const CVector> inputs,
                                    std::span<const CVector> images,
                                    double tolerance = tol::kStructural);

}  // namespace qac
