#include "nmwit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nmwit {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi rotation zeroing a(p,q). The complex off-diagonal phase
// is absorbed into the rotation so the 2x2 problem is the real symmetric one.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cxd apq = a(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;
    const cxd f = apq / b;  // phase of a(p,q)
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * b);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // J differs from identity only in the (p,q) block:
    //   J_pp = c, J_pq = s, J_qp = -s conj(f), J_qq = c conj(f)
    const std::size_t n = a.rows();
    const cxd jqp = -s * std::conj(f);
    const cxd jqq = c * std::conj(f);
    for (std::size_t k = 0; k < n; ++k) {  // A <- A J (columns p,q)
        const cxd akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + jqp * akq;
        a(k, q) = s * akp + jqq * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- J^dag A (rows p,q)
        const cxd apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(jqp) * aqk;
        a(q, k) = s * apk + std::conj(jqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {  // V <- V J
        const cxd vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + jqp * vkq;
        v(k, q) = s * vkp + jqq * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    const double asym = h.max_asymmetry();
    if (asym > hermitian_tolerance) {
        std::ostringstream os;
        os << "hermitian_eig: input not Hermitian, max|M - M^dag| = " << asym;
        throw std::invalid_argument(os.str());
    }
    const std::size_t n = h.rows();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-14 * a.frobenius_norm();
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    EigenSystem es;
    es.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
    es.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        es.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
    }
    return es;
}

double trace_norm(const ComplexMatrix& h) {
    const auto es = hermitian_eig(h);
    double s = 0.0;
    for (double w : es.values) s += std::abs(w);
    return s;
}

double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eig(h).values.front(); }

ComplexMatrix spectral_apply(const ComplexMatrix& h,
                             const std::function<double(double)>& f) {
    const auto es = hermitian_eig(h);
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(es.values[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += fk * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return out;
}

}  // namespace nmwit
