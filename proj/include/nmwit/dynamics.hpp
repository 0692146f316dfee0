// dynamics.hpp — random-unitary qubit evolutions: Pauli channels and their
// eigenvalue calculus, the eternally non-Markovian (ENM) rate model with its
// closed-form channel and inverse, and Simpson integration from rates to
// channels.

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nmwit/complex_matrix.hpp"

namespace nmwit {

// Mixing coefficients of rho -> sum_mu p_mu sigma_mu rho sigma_mu. Valid
// channels have p_mu >= 0; inverse maps are carried in the same form with
// negative entries allowed (the coefficients always sum to 1).
struct PauliChannel {
    std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
};

PauliChannel identity_channel();
PauliChannel depolarizing_channel();  // (1/4,1/4,1/4,1/4)

bool is_probability(const PauliChannel& ch, double tol = 1e-12);

// sum p_mu sigma_mu m sigma_mu on a 2x2 operator
ComplexMatrix apply_pauli(const PauliChannel& ch, const ComplexMatrix& m);

// (lambda_1, lambda_2, lambda_3) with Lambda[sigma_i] = lambda_i sigma_i
std::array<double, 3> channel_eigenvalues(const PauliChannel& ch);
PauliChannel channel_from_eigenvalues(const std::array<double, 3>& lam);

// composition multiplies eigenvalues componentwise
PauliChannel compose(const PauliChannel& a, const PauliChannel& b);

struct RateFunctions {
    std::function<double(double)> gamma1, gamma2, gamma3;
};

struct ENMParams {
    double alpha = 2.0;  // >= 1
    double c = 0.5;      // > 0, inverse time
};

void validate(const ENMParams& p);

// gamma_1 = gamma_2 = alpha c/2, gamma_3(t) = -alpha c/2 tanh(ct)
RateFunctions enm_rates(const ENMParams& p);

// closed-form ENM Pauli channel at time t >= 0
PauliChannel enm_channel(const ENMParams& p, double t);

// quasi-channel with enm_inverse o enm_channel = identity
PauliChannel enm_inverse(const ENMParams& p, double t);

// lambda_i(t) = exp(-2 int_0^t (gamma_j + gamma_k)), composite Simpson with
// `steps` subintervals (rounded up to even)
PauliChannel integrate_rates(const RateFunctions& r, double t, std::size_t steps);

struct DivisibilityFlags {
    double t = 0.0;
    bool cp = false;  // all gamma_i(t) >= -1e-12
    bool p = false;   // all pairwise gamma_i + gamma_j >= -1e-12
};

std::vector<DivisibilityFlags> rate_divisibility_report(const RateFunctions& r,
                                                        const std::vector<double>& grid);

}  // namespace nmwit
