#include "nmwit/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "nmwit/states.hpp"

namespace nmwit {

PauliChannel identity_channel() { return PauliChannel{{1.0, 0.0, 0.0, 0.0}}; }
PauliChannel depolarizing_channel() { return PauliChannel{{0.25, 0.25, 0.25, 0.25}}; }

bool is_probability(const PauliChannel& ch, double tol) {
    double sum = 0.0;
    for (double v : ch.p) {
        if (v < -tol) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

ComplexMatrix apply_pauli(const PauliChannel& ch, const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("apply_pauli: expected a 2x2 operator");
    ComplexMatrix out(2, 2);
    for (std::size_t mu = 0; mu < 4; ++mu) {
        if (ch.p[mu] == 0.0) continue;
        out += ch.p[mu] * (pauli(mu) * m * pauli(mu));
    }
    return out;
}

std::array<double, 3> channel_eigenvalues(const PauliChannel& ch) {
    const auto& p = ch.p;
    return {p[0] + p[1] - p[2] - p[3],
            p[0] - p[1] + p[2] - p[3],
            p[0] - p[1] - p[2] + p[3]};
}

PauliChannel channel_from_eigenvalues(const std::array<double, 3>& lam) {
    // p_mu = (1/4) sum_nu H_{mu nu} lambda_nu with lambda_0 = 1 and H the
    // 4x4 +-1 transform pairing each Pauli with itself
    const double l1 = lam[0], l2 = lam[1], l3 = lam[2];
    return PauliChannel{{0.25 * (1 + l1 + l2 + l3), 0.25 * (1 + l1 - l2 - l3),
                         0.25 * (1 - l1 + l2 - l3), 0.25 * (1 - l1 - l2 + l3)}};
}

PauliChannel compose(const PauliChannel& a, const PauliChannel& b) {
    const auto la = channel_eigenvalues(a);
    const auto lb = channel_eigenvalues(b);
    return channel_from_eigenvalues({la[0] * lb[0], la[1] * lb[1], la[2] * lb[2]});
}

void validate(const ENMParams& p) {
    if (!(p.alpha >= 1.0)) throw std::invalid_argument("ENMParams: alpha must be >= 1");
    if (!(p.c > 0.0)) throw std::invalid_argument("ENMParams: c must be > 0");
}

RateFunctions enm_rates(const ENMParams& p) {
    validate(p);
    const double g = p.alpha * p.c / 2.0;
    const double c = p.c;
    return RateFunctions{[g](double) { return g; },
                         [g](double) { return g; },
                         [g, c](double t) { return -g * std::tanh(c * t); }};
}

namespace {

// lambda_1 = lambda_2 = e^{-act} cosh^a(ct) and lambda_3 = e^{-2act},
// written in forms that neither overflow nor cancel
std::array<double, 3> enm_lambdas(const ENMParams& p, double t) {
    const double l1 = std::pow(0.5 * (1.0 + std::exp(-2.0 * p.c * t)), p.alpha);
    const double l3 = std::exp(-2.0 * p.alpha * p.c * t);
    return {l1, l1, l3};
}

}  // namespace

PauliChannel enm_channel(const ENMParams& p, double t) {
    validate(p);
    if (t < 0.0) throw std::invalid_argument("enm_channel: t must be >= 0");
    return channel_from_eigenvalues(enm_lambdas(p, t));
}

PauliChannel enm_inverse(const ENMParams& p, double t) {
    validate(p);
    if (t < 0.0) throw std::invalid_argument("enm_inverse: t must be >= 0");
    const auto lam = enm_lambdas(p, t);
    return channel_from_eigenvalues({1.0 / lam[0], 1.0 / lam[1], 1.0 / lam[2]});
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t k = 1; k < n; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * f(a + h * k);
    return s * h / 3.0;
}

}  // namespace

PauliChannel integrate_rates(const RateFunctions& r, double t, std::size_t steps) {
    if (t < 0.0) throw std::invalid_argument("integrate_rates: t must be >= 0");
    if (steps < 1) throw std::invalid_argument("integrate_rates: steps must be >= 1");
    if (t == 0.0) return identity_channel();
    const auto pair_integral = [&](const std::function<double(double)>& f,
                                   const std::function<double(double)>& g) {
        return simpson([&](double s) { return f(s) + g(s); }, 0.0, t, steps);
    };
    return channel_from_eigenvalues({std::exp(-2.0 * pair_integral(r.gamma2, r.gamma3)),
                                     std::exp(-2.0 * pair_integral(r.gamma1, r.gamma3)),
                                     std::exp(-2.0 * pair_integral(r.gamma1, r.gamma2))});
}

std::vector<DivisibilityFlags> rate_divisibility_report(const RateFunctions& r,
                                                        const std::vector<double>& grid) {
    constexpr double tol = 1e-12;
    std::vector<DivisibilityFlags> out;
    out.reserve(grid.size());
    for (double t : grid) {
        const double g1 = r.gamma1(t), g2 = r.gamma2(t), g3 = r.gamma3(t);
        DivisibilityFlags f;
        f.t = t;
        f.cp = g1 >= -tol && g2 >= -tol && g3 >= -tol;
        f.p = g1 + g2 >= -tol && g1 + g3 >= -tol && g2 + g3 >= -tol;
        out.push_back(f);
    }
    return out;
}

}  // namespace nmwit
