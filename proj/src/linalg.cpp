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

#include "qac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qac/errors.hpp"

namespace qac {

CVector CVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InputError("basis index " + std::to_string(index) + " out of range for dim " +
                         std::to_string(dim));
    }
    CVector v(dim);
    v[index] = 1.0;
    return v;
}

double CVector::norm() const {
    double s = 0.0;
    for (const auto &z : data_) s += std::norm(z);
    return std::sqrt(s);
}

CVector CVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InputError("cannot normalize the zero vector");
    CVector out = *this;
    out *= 1.0 / n;
    return out;
}

CVector CVector::conj() const {
    CVector out = *this;
    for (auto &z : out.data_) z = std::conj(z);
    return out;
}

CVector &CVector::operator+=(const CVector &o) {
    if (dim() != o.dim()) throw InputError("vector dimension mismatch in +");
    for (std::size_t i = 0; i < dim(); ++i) data_[i] += o.data_[i];
    return *this;
}

CVector &CVector::operator-=(const CVector &o) {
    if (dim() != o.dim()) throw InputError("vector dimension mismatch in -");
    for (std::size_t i = 0; i < dim(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CVector &CVector::operator*=(cplx s) {
    for (auto &z : data_) z *= s;
    return *this;
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::projector(const CVector &v) { return outer(v, v); }

CMatrix CMatrix::outer(const CVector &a, const CVector &b) {
    CMatrix m(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = a[i] * std::conj(b[j]);
    }
    return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> cols) {
    if (cols.empty()) return {};
    CMatrix m(cols[0].dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

CVector CMatrix::column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void CMatrix::set_column(std::size_t c, const CVector &v) {
    if (v.dim() != rows_ || c >= cols_) throw InputError("set_column: shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

cplx CMatrix::trace() const {
    if (!square()) throw InputError("trace of a non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool CMatrix::is_hermitian(double tolerance) const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
        }
    }
    return true;
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &z : data_) z *= s;
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    CMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    }
    return m;
}

CVector operator*(const CMatrix &a, const CVector &v) {
    if (a.cols_ != v.dim()) throw InputError("matrix-vector shape mismatch");
    CVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * v[k];
        out[i] = s;
    }
    return out;
}

cplx inner(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) throw InputError("inner product dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) { return (a - b).max_abs(); }

double max_abs_diff(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) throw InputError("vector dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

CVector tensor(const CVector &a, const CVector &b) {
    CVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    }
    return out;
}

CMatrix tensor(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

CMatrix partial_trace(const CMatrix &rho, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep) {
    if (dims.empty()) throw InputError("partial_trace: no factor dimensions given");
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
    if (!rho.square() || rho.rows() != total) {
        throw InputError("partial_trace: matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", factors multiply to " +
                         std::to_string(total));
    }
    if (keep.empty()) throw InputError("partial_trace: keep set is empty");
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) throw InputError("partial_trace: keep index out of range");
        if (kept[k]) throw InputError("partial_trace: duplicate keep index");
        kept[k] = true;
    }

    // For every full index, its position within the kept and traced subsystems.
    std::vector<std::size_t> kept_index(total), traced_index(total);
    std::size_t kept_dim = 1;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (kept[f]) kept_dim *= dims[f];
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx, ki = 0, ti = 0, kstride = 1, tstride = 1;
        for (std::size_t f = dims.size(); f-- > 0;) {
            const std::size_t digit = rem % dims[f];
            rem /= dims[f];
            if (kept[f]) {
                ki += digit * kstride;
                kstride *= dims[f];
            } else {
                ti += digit * tstride;
                tstride *= dims[f];
            }
        }
        kept_index[idx] = ki;
        traced_index[idx] = ti;
    }

    CMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
        }
    }
    return out;
}

CMatrix gram(std::span<const CVector> vs) {
    CMatrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = inner(vs[i], vs[j]);
    }
    return g;
}

double isometry_defect(const CMatrix &v) {
    return max_abs_diff(v.adjoint() * v, CMatrix::identity(v.cols()));
}

EigenSystem hermitian_eigensystem(const CMatrix &h, double hermitian_tol) {
    if (!h.square()) throw InputError("hermitian_eigensystem: matrix is not square");
    if (!h.is_hermitian(hermitian_tol)) throw InputError("hermitian_eigensystem: matrix is not Hermitian");
    const std::size_t n = h.rows();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);

    double frob = 0.0;
    for (const auto &z : a.entries()) frob += std::norm(z);
    const double threshold = 1e-14 * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                if (p != q) s += std::norm(a(p, q));
            }
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                // Phase D = diag(.., e^{-i phi} at q) makes the (p,q) entry real, then a
                // real Jacobi rotation annihilates it. W = D R.
                const cplx phase = std::conj(a(p, q)) / mag;  // e^{-i phi}
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx wpp = c, wpq = s, wqp = -s * phase, wqq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {  // A <- A W
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * wpp + akq * wqp;
                    a(k, q) = akp * wpq + akq * wqq;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * wpp + vkq * wqp;
                    v(k, q) = vkp * wpq + vkq * wqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- W^dagger A
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
                    a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem out{std::vector<double>(n), CMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        out.vectors.set_column(k, v.column(order[k]));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &h, double hermitian_tol) {
    return hermitian_eigensystem(h, hermitian_tol).values;
}

namespace {

// Two-pass modified Gram-Schmidt of `w` against an orthonormal list.
// Returns the coefficients removed in each pass, summed.
std::vector<cplx> project_out(CVector &w, const std::vector<CVector> &basis) {
    std::vector<cplx> coeffs(basis.size(), 0.0);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const cplx c = inner(basis[k], w);
            coeffs[k] += c;
            w -= c * basis[k];
        }
    }
    return coeffs;
}

}  // namespace

std::vector<CVector> orthonormal_complete(std::span<const CVector> vs, std::size_t dim,
                                          double rank_tol) {
    if (vs.size() > dim) throw InputError("orthonormal_complete: more vectors than dimensions");
    std::vector<CVector> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].dim() != dim) throw InputError("orthonormal_complete: vector length != dim");
        CVector w = vs[i];
        project_out(w, out);
        const double r = w.norm();
        if (r < rank_tol) {
            throw RankError("orthonormal_complete: input " + std::to_string(i) +
                            " is linearly dependent on its predecessors");
        }
        out.push_back(w * (1.0 / r));
    }
    for (std::size_t k = 0; k < dim && out.size() < dim; ++k) {
        CVector w = CVector::basis(dim, k);
        project_out(w, out);
        const double r = w.norm();
        if (r < rank_tol) continue;
        out.push_back(w * (1.0 / r));
    }
    return out;
}

CMatrix unitary_from_correspondence(std::span<const CVector> inputs,
                                    std::span<const CVector> images, double tolerance) {
    if (inputs.size() != images.size() || inputs.empty()) {
        throw InputError("unitary_from_correspondence: need equally many (>0) inputs and images");
    }
    const std::size_t n = inputs[0].dim();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].dim() != n || images[i].dim() != n) {
            throw InputError("unitary_from_correspondence: all vectors must share one dimension");
        }
    }
    const double gram_gap = max_abs_diff(gram(inputs), gram(images));
    if (gram_gap > tolerance) {
        throw InfeasibleError("unitary_from_correspondence: Gram matrices differ by " +
                              std::to_string(gram_gap));
    }

    // Orthonormalize the inputs, replaying every elimination step on the images
    // so that U e_k = f_k holds by linearity.
    std::vector<CVector> e, f;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        CVector w = inputs[i];
        CVector w_img = images[i];
        const auto coeffs = project_out(w, e);
        for (std::size_t k = 0; k < f.size(); ++k) w_img -= coeffs[k] * f[k];
        const double r = w.norm();
        const double r_img = w_img.norm();
        if (r < tolerance) {
            if (r_img > std::sqrt(tolerance)) {
                throw RankError("unitary_from_correspondence: input " + std::to_string(i) +
                                " is dependent but its image is not");
            }
            continue;
        }
        if (r_img < tolerance) {
            throw RankError("unitary_from_correspondence: image " + std::to_string(i) +
                            " is dependent but its input is not");
        }
        e.push_back(w * (1.0 / r));
        CVector fk = w_img * (1.0 / r);
        project_out(fk, f);  // removes rounding-level overlap only
        f.push_back(fk.normalized());
    }

    const auto e_full = orthonormal_complete(e, n, tolerance);
    const auto f_full = orthonormal_complete(f, n, tolerance);
    CMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) u += CMatrix::outer(f_full[k], e_full[k]);
    return u;
}

}  // namespace qac
