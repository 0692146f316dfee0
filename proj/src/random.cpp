#include "nmwit/random.hpp"

#include <cmath>

#include "nmwit/eigen.hpp"

namespace nmwit {

double Rng::uniform() {
    // 53 uniform bits -> [0,1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

cxd Rng::complex_gaussian() {
    const double re = normal();
    const double im = normal();
    return cxd(re, im);
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return 0.5 * (g + g.dagger());
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
    return hermitian_eig(random_hermitian(rng, n)).vectors;
}

DensityMatrix random_state(Rng& rng, std::size_t n, std::size_t ancilla) {
    if (ancilla == 0) ancilla = n;
    ComplexMatrix g(n, ancilla);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ancilla; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix rho = g * g.dagger();
    rho *= 1.0 / rho.trace().real();
    // scrub rounding asymmetry so factory tolerances are met exactly
    rho = 0.5 * (rho + rho.dagger());
    return density_matrix(std::move(rho), {n});
}

DensityMatrix random_state(Rng& rng, const Dims& dims) {
    DensityMatrix rho = random_state(rng, dims_product(dims));
    rho.dims = dims;
    return rho;
}

PauliChannel random_pauli_channel(Rng& rng) {
    PauliChannel ch;
    double sum = 0.0;
    for (auto& v : ch.p) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        v = -std::log(u);  // exponential(1) -> Dirichlet(1,1,1,1) after normalizing
        sum += v;
    }
    for (auto& v : ch.p) v /= sum;
    return ch;
}

}  // namespace nmwit
