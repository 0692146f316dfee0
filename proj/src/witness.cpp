#include "nmwit/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "nmwit/divisibility.hpp"
#include "nmwit/eigen.hpp"

namespace nmwit {

namespace {

// (1-l) I_6/6 + l |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2) on
// C2 (x) C3 (b in {0,1}); composite index 3a + b
ComplexMatrix primed_one(double lambda) {
    ComplexMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) m(i, i) = (1.0 - lambda) / 6.0;
    m(0, 0) += lambda / 2.0;
    m(4, 4) += lambda / 2.0;
    m(0, 4) += lambda / 2.0;
    m(4, 0) += lambda / 2.0;
    return m;
}

// (1-l) I_6/6 + l |0><0| (x) |2><2|
ComplexMatrix primed_two(double lambda) {
    ComplexMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) m(i, i) = (1.0 - lambda) / 6.0;
    m(2, 2) += lambda;
    return m;
}

}  // namespace

double lambda_star_closed(const ENMParams& p, double t_star) {
    validate(p);
    if (!(t_star > 0.0)) throw std::invalid_argument("lambda_star_closed: t* must be > 0");
    return 1.0 / (3.0 * std::exp(2.0 * p.alpha * p.c * t_star) - 2.0);
}

WitnessScenario build_scenario(const ENMParams& p, double t_star) {
    validate(p);
    if (!(t_star > 0.0)) throw std::invalid_argument("build_scenario: t* must be > 0");
    WitnessScenario s;
    s.params = p;
    s.t_star = t_star;
    s.lambda_star = lambda_star_closed(p, t_star);
    s.chi = 0.5 * (std::pow((1.0 + 2.0 * s.lambda_star) / s.lambda_star, 1.0 / p.alpha) +
                   std::pow(3.0, 1.0 / p.alpha));
    const LinearMap pull = extend_first(channel_map(enm_inverse(p, t_star)), 2, 3);
    s.rho1 = density_matrix(pull(primed_one(s.lambda_star)), {2, 3});
    s.rho2 = density_matrix(pull(primed_two(s.lambda_star)), {2, 3});

    // R(t,t*) = 1 just after t*; a further root exists iff R comes back down
    // through 1, which its t -> infinity limit decides
    const double t_max = 50.0 / p.c;
    const auto ratio = [&](double t) { return witness_ratio(s, t); };
    if (ratio(t_max) < 1.0) {
        double lo = t_star + 1e-9, hi = t_max;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (ratio(mid) > 1.0 ? lo : hi) = mid;
        }
        s.t_up = 0.5 * (lo + hi);
    }
    return s;
}

DensityMatrix tripartite_initial(const WitnessScenario& s) {
    const ComplexMatrix psip = bell_vector(BellKind::psi_plus);
    const ComplexMatrix psim = bell_vector(BellKind::psi_minus);
    ComplexMatrix m = 0.5 * (kron(s.rho1.mat, psip * psip.dagger()) +
                             kron(s.rho2.mat, psim * psim.dagger()));
    return density_matrix(std::move(m), {2, 3, 2, 2});
}

DensityMatrix evolve(const WitnessScenario& s, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
    const DensityMatrix initial = tripartite_initial(s);
    const LinearMap ext = extend_first(channel_map(enm_channel(s.params, t)), 2, 12);
    return density_matrix(ext(initial.mat), {2, 3, 2, 2});
}

double witness_negativity(const WitnessScenario& s, double t, NegativityMethod m) {
    if (t < 0.0) throw std::invalid_argument("witness_negativity: t must be >= 0");
    if (m == NegativityMethod::full) {
        return negativity(evolve(s, t), 3);  // AB|C cut: transpose the last factor
    }
    const LinearMap ext = extend_first(channel_map(enm_channel(s.params, t)), 2, 3);
    const ComplexMatrix half_diff = 0.5 * (s.rho1.mat - s.rho2.mat);
    return 0.5 * trace_norm(ext(half_diff));
}

double witness_ratio(const WitnessScenario& s, double t) {
    const double a = s.params.alpha, c = s.params.c, ts = s.t_star;
    // (cosh(ct)/cosh(ct*))^alpha / cosh(alpha c (t-t*)) without large exponentials
    const double base = (1.0 + std::exp(-2.0 * c * t)) / (1.0 + std::exp(-2.0 * c * ts));
    return 2.0 * std::pow(base, a) / (1.0 + std::exp(-2.0 * a * c * (t - ts)));
}

double analytic_trace_distance(const WitnessScenario& s, double t) {
    if (t < 0.0) throw std::invalid_argument("analytic_trace_distance: t must be >= 0");
    const double a = s.params.alpha, c = s.params.c, ts = s.t_star, l = s.lambda_star;
    if (t <= ts) return 2.0 * l * std::exp(-2.0 * a * c * (t - ts));
    if (s.t_up && t > *s.t_up) return 2.0 * l;
    const double r = witness_ratio(s, t);
    return 2.0 * l * 0.25 * (3.0 + std::exp(-2.0 * a * c * (t - ts)) * (r - 1.0) + r);
}

double right_derivative(const WitnessScenario& s) {
    return 0.5 * s.params.alpha * s.params.c * s.lambda_star *
           std::tanh(s.params.c * s.t_star);
}

DistillabilityReport distillability_check(const DensityMatrix& tripartite) {
    if (tripartite.dims.size() < 2)
        throw std::invalid_argument("distillability_check: need at least two factors");
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k + 1 < tripartite.dims.size(); ++k) keep.push_back(k);
    Dims ab_dims(tripartite.dims.begin(), tripartite.dims.end() - 1);
    const DensityMatrix rho_ab =
        density_matrix(partial_trace(tripartite.mat, tripartite.dims, keep), ab_dims);
    DistillabilityReport rep;
    rep.s_ab = von_neumann_entropy(rho_ab);
    rep.s_abc = von_neumann_entropy(tripartite);
    rep.margin = rep.s_ab - rep.s_abc;
    return rep;
}

}  // namespace nmwit
