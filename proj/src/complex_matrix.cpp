#include "nmwit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmwit {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix +: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix -: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

cxd ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cxd t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_asymmetry() const {
    if (rows_ != cols_) throw std::invalid_argument("max_asymmetry: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return rows_ == cols_ && max_asymmetry() <= tol;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cxd s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cxd s) { return a *= s; }
ComplexMatrix operator-(const ComplexMatrix& a) { return cxd(-1.0) * a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix *: shape mismatch");
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            if (aij == cxd(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

std::size_t dims_product(const Dims& dims) {
    std::size_t d = 1;
    for (auto x : dims) d *= x;
    return d;
}

namespace {

void check_dims(const ComplexMatrix& m, const Dims& dims) {
    if (m.rows() != m.cols()) throw std::invalid_argument("tensor op: matrix not square");
    if (dims.empty() || dims_product(dims) != m.rows())
        throw std::invalid_argument("tensor op: dims do not factor the matrix dimension");
}

// digits of a composite index, big-endian in dims
void decode(std::size_t idx, const Dims& dims, std::vector<std::size_t>& out) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
}

std::size_t encode(const std::vector<std::size_t>& digits, const Dims& dims) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            const std::vector<std::size_t>& keep) {
    check_dims(m, dims);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dims.size()) throw std::invalid_argument("partial_trace: bad keep index");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw std::invalid_argument("partial_trace: keep indices must be ascending");
    }
    Dims kept_dims;
    for (auto k : keep) kept_dims.push_back(dims[k]);
    const std::size_t n = dims.size();
    const std::size_t d = m.rows();
    const std::size_t dk = dims_product(kept_dims);
    ComplexMatrix out(dk, dk);
    std::vector<std::size_t> ri(n), ci(n), rk(keep.size()), ck(keep.size());
    for (std::size_t r = 0; r < d; ++r) {
        decode(r, dims, ri);
        for (std::size_t c = 0; c < d; ++c) {
            decode(c, dims, ci);
            bool diag = true;
            for (std::size_t s = 0; s < n && diag; ++s) {
                bool is_kept = false;
                for (auto k : keep) is_kept |= (k == s);
                if (!is_kept && ri[s] != ci[s]) diag = false;
            }
            if (!diag) continue;
            for (std::size_t k = 0; k < keep.size(); ++k) {
                rk[k] = ri[keep[k]];
                ck[k] = ci[keep[k]];
            }
            out(encode(rk, kept_dims), encode(ck, kept_dims)) += m(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims,
                                std::size_t subsystem) {
    check_dims(m, dims);
    if (subsystem >= dims.size())
        throw std::invalid_argument("partial_transpose: bad subsystem index");
    const std::size_t n = dims.size();
    const std::size_t d = m.rows();
    ComplexMatrix out(d, d);
    std::vector<std::size_t> ri(n), ci(n);
    for (std::size_t r = 0; r < d; ++r) {
        decode(r, dims, ri);
        for (std::size_t c = 0; c < d; ++c) {
            decode(c, dims, ci);
            std::swap(ri[subsystem], ci[subsystem]);
            out(encode(ri, dims), encode(ci, dims)) = m(r, c);
            std::swap(ri[subsystem], ci[subsystem]);
        }
    }
    return out;
}

}  // namespace nmwit
