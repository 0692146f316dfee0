// complex_matrix.hpp — dense complex matrices and tensor-index utilities
// (Kronecker products, partial trace, partial transpose).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace nmwit {

using cxd = std::complex<double>;
using Dims = std::vector<std::size_t>;

// Row-major dense complex matrix. The one carrier type for states, channels
// and Choi matrices; everything in this project is <= 24 dimensional, so no
// attempt is made at sparsity or blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    // nested braces, row by row
    ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cxd s);

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    cxd trace() const;

    double max_abs() const;            // max entrywise |a_ij|
    double max_asymmetry() const;      // max |a_ij - conj(a_ji)|, square only
    double frobenius_norm() const;
    bool is_hermitian(double tol = 1e-12) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cxd> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cxd s);
ComplexMatrix operator-(const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; (a (x) b)(ik,jl) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Composite indices are big-endian in `dims`: subsystem 0 is the leftmost
// (most significant) tensor factor. Used consistently everywhere.
std::size_t dims_product(const Dims& dims);

// Trace out every factor not listed in `keep` (indices ascending, unique).
ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            const std::vector<std::size_t>& keep);

// Transpose a single tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims,
                                std::size_t subsystem);

}  // namespace nmwit
