#include "nmwit/divisibility.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nmwit/eigen.hpp"
#include "nmwit/states.hpp"

namespace nmwit {

LinearMap channel_map(const PauliChannel& ch) {
    return [ch](const ComplexMatrix& m) { return apply_pauli(ch, m); };
}

LinearMap extend_first(const LinearMap& map, std::size_t d_first, std::size_t d_rest) {
    // precompute the map on matrix units of the first factor
    std::vector<ComplexMatrix> images(d_first * d_first);
    for (std::size_t k = 0; k < d_first; ++k)
        for (std::size_t l = 0; l < d_first; ++l) {
            ComplexMatrix unit(d_first, d_first);
            unit(k, l) = 1.0;
            images[k * d_first + l] = map(unit);
        }
    return [d_first, d_rest, images = std::move(images)](const ComplexMatrix& x) {
        const std::size_t d = d_first * d_rest;
        if (x.rows() != d || x.cols() != d)
            throw std::invalid_argument("extend_first: operator dimension mismatch");
        ComplexMatrix out(d, d);
        for (std::size_t k = 0; k < d_first; ++k)
            for (std::size_t l = 0; l < d_first; ++l) {
                const ComplexMatrix& img = images[k * d_first + l];
                for (std::size_t i = 0; i < d_first; ++i)
                    for (std::size_t j = 0; j < d_first; ++j) {
                        const cxd w = img(i, j);
                        if (w == cxd(0.0)) continue;
                        for (std::size_t r = 0; r < d_rest; ++r)
                            for (std::size_t c = 0; c < d_rest; ++c)
                                out(i * d_rest + r, j * d_rest + c) +=
                                    w * x(k * d_rest + r, l * d_rest + c);
                    }
            }
        return out;
    };
}

ChoiMatrix choi_of(const LinearMap& map, std::size_t d) {
    if (d < 2) throw std::invalid_argument("choi_of: dimension must be >= 2");
    ComplexMatrix omega(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ComplexMatrix unit(d, d);
            unit(i, j) = 1.0;
            const ComplexMatrix img = map(unit);  // Lambda[|i><j|]
            if (img.rows() != d || img.cols() != d)
                throw std::invalid_argument("choi_of: map changes dimension");
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    omega(r * d + i, c * d + j) += img(r, c);
        }
    if (omega.max_asymmetry() > 1e-10)
        throw std::invalid_argument("choi_of: map is not Hermiticity-preserving");
    if (std::abs(omega.trace() - cxd(static_cast<double>(d))) > 1e-10)
        throw std::invalid_argument("choi_of: CJ trace differs from d");
    const ComplexMatrix marginal = partial_trace(omega, {d, d}, {1});
    const double tp_residual = max_abs_diff(marginal, ComplexMatrix::identity(d));
    if (tp_residual > 1e-9) {
        std::ostringstream os;
        os << "choi_of: map is not trace-preserving, Tr_A residual = " << tp_residual;
        throw std::invalid_argument(os.str());
    }
    return ChoiMatrix{d, std::move(omega)};
}

ComplexMatrix apply_via_choi(const ChoiMatrix& omega, const ComplexMatrix& rho) {
    const std::size_t d = omega.dim;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("apply_via_choi: operator dimension mismatch");
    const ComplexMatrix prod = omega.mat * kron(ComplexMatrix::identity(d), rho.transpose());
    return partial_trace(prod, {d, d}, {0});
}

namespace {

// lambda_{t-s}^{2 alpha} and Gamma_{t,s}^alpha in overflow-free form
void enm_vts_scalars(const ENMParams& p, double s, double t, double& lam2a, double& gamma_a) {
    lam2a = std::exp(-2.0 * p.alpha * p.c * (t - s));
    gamma_a = std::pow((1.0 + std::exp(-2.0 * p.c * t)) / (1.0 + std::exp(-2.0 * p.c * s)),
                       p.alpha);
}

void check_interval(double s, double t, const char* who) {
    if (s < 0.0 || t < s) {
        std::ostringstream os;
        os << who << ": need 0 <= s <= t";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

ChoiMatrix enm_intermediate_choi(const ENMParams& p, double s, double t) {
    validate(p);
    check_interval(s, t, "enm_intermediate_choi");
    double lam2a, gamma_a;
    enm_vts_scalars(p, s, t, lam2a, gamma_a);
    ComplexMatrix m(4, 4);
    m(0, 0) = m(3, 3) = 0.5 * (1.0 + lam2a);
    m(1, 1) = m(2, 2) = 0.5 * (1.0 - lam2a);
    m(0, 3) = m(3, 0) = gamma_a;
    return ChoiMatrix{2, std::move(m)};
}

CpVerdict is_cp(const ChoiMatrix& omega, double tol) {
    const double w = min_eigenvalue(omega.mat);
    return CpVerdict{w >= -tol, w};
}

DecompositionWitness enm_decomposition(const ENMParams& p, double s, double t) {
    validate(p);
    check_interval(s, t, "enm_decomposition");
    double lam2a, gamma_a;
    enm_vts_scalars(p, s, t, lam2a, gamma_a);
    DecompositionWitness w;
    w.p1 = 0.5 * (lam2a + gamma_a);
    w.p2 = 0.5 * (1.0 - gamma_a);
    const ComplexMatrix phip = bell_vector(BellKind::phi_plus);
    const ComplexMatrix phim = bell_vector(BellKind::phi_minus);
    const ComplexMatrix psip = bell_vector(BellKind::psi_plus);
    const ComplexMatrix p_phip = 2.0 * (phip * phip.dagger());
    const ComplexMatrix p_phim = 2.0 * (phim * phim.dagger());
    const ComplexMatrix p_psip_tb =
        partial_transpose(2.0 * (psip * psip.dagger()), {2, 2}, 1);
    const ComplexMatrix recon = w.p1 * p_phip + w.p2 * p_phim +
                                (1.0 - w.p1 - w.p2) * p_psip_tb;
    w.residual = max_abs_diff(recon, enm_intermediate_choi(p, s, t).mat);
    return w;
}

ComplexMatrix decomposable_positive_apply(double p, const LinearMap& e1,
                                          const LinearMap& e2, const ComplexMatrix& rho) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("decomposable_positive_apply: p must be in [0,1]");
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("decomposable_positive_apply: operator not square");
    ComplexMatrix out = e1(rho);
    out *= p;
    ComplexMatrix co = e2(rho.transpose());
    co *= (1.0 - p);
    return out + co;
}

ComplexMatrix decomposable_positive_apply_local(double p, const LinearMap& e1,
                                                const LinearMap& e2,
                                                const ComplexMatrix& rho,
                                                const Dims& dims) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("decomposable_positive_apply_local: p must be in [0,1]");
    if (dims.size() < 2 || dims_product(dims) != rho.rows())
        throw std::invalid_argument("decomposable_positive_apply_local: dims mismatch");
    const std::size_t d_first = dims[0];
    const std::size_t d_rest = dims_product(dims) / d_first;
    const LinearMap ext1 = extend_first(e1, d_first, d_rest);
    const LinearMap ext2 = extend_first(e2, d_first, d_rest);
    const ComplexMatrix rho_ta = partial_transpose(rho, dims, 0);
    ComplexMatrix out = ext1(rho);
    out *= p;
    ComplexMatrix co = ext2(rho_ta);
    co *= (1.0 - p);
    return out + co;
}

ComplexMatrix choi_map_3(const ComplexMatrix& rho) {
    if (rho.rows() != 3 || rho.cols() != 3)
        throw std::invalid_argument("choi_map_3: expected a 3x3 operator");
    ComplexMatrix out = -rho;
    out(0, 0) = rho(0, 0) + 2.0 * rho(1, 1);
    out(1, 1) = rho(1, 1) + 2.0 * rho(2, 2);
    out(2, 2) = rho(2, 2) + 2.0 * rho(0, 0);
    out *= (1.0 / 3.0);
    return out;
}

}  // namespace nmwit
