#include "nmwit/profiles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nmwit/eigen.hpp"
#include "nmwit/random.hpp"

namespace nmwit {

double contractive_eval(ContractiveKind kind, const DensityMatrix& rho,
                        const DensityMatrix& sigma, double renyi_alpha) {
    switch (kind) {
        case ContractiveKind::trace_distance: return trace_distance(rho, sigma);
        case ContractiveKind::infidelity: return 1.0 - fidelity(rho, sigma);
        case ContractiveKind::relative_entropy: return relative_entropy(rho, sigma);
        case ContractiveKind::renyi: return renyi_relative(rho, sigma, renyi_alpha);
    }
    throw std::invalid_argument("contractive_eval: unknown kind");
}

std::vector<double> contractive_scan(ContractiveKind kind, const ENMParams& p,
                                     const DensityMatrix& rho, const DensityMatrix& sigma,
                                     const std::vector<double>& grid, double renyi_alpha) {
    if (rho.mat.rows() != 2 || sigma.mat.rows() != 2)
        throw std::invalid_argument("contractive_scan: single-qubit states expected");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] < 0.0 || (i > 0 && grid[i] <= grid[i - 1]))
            throw std::invalid_argument("contractive_scan: grid must be ascending and >= 0");
    std::vector<double> out;
    out.reserve(grid.size());
    for (double t : grid) {
        const PauliChannel ch = enm_channel(p, t);
        const DensityMatrix r{apply_pauli(ch, rho.mat), {2}};
        const DensityMatrix s{apply_pauli(ch, sigma.mat), {2}};
        out.push_back(contractive_eval(kind, r, s, renyi_alpha));
    }
    return out;
}

LinearMap depolarizing_step(double a, double dt, std::size_t d) {
    if (a < 0.0 || a > 1.0)
        throw std::invalid_argument("depolarizing_step: a must be in [0,1]");
    if (dt < 0.0) throw std::invalid_argument("depolarizing_step: dt must be >= 0");
    if (d < 1) throw std::invalid_argument("depolarizing_step: d must be >= 1");
    const double keep = std::pow(a, dt);
    return [keep, d](const ComplexMatrix& rho) {
        if (rho.rows() != d || rho.cols() != d)
            throw std::invalid_argument("depolarizing_step: dimension mismatch");
        ComplexMatrix out = keep * rho;
        const cxd unit = (1.0 - keep) * rho.trace() / static_cast<double>(d);
        for (std::size_t i = 0; i < d; ++i) out(i, i) += unit;
        return out;
    };
}

bool ProfileMatch::all_matched() const {
    for (bool f : feasible)
        if (!f) return false;
    return true;
}

namespace {

constexpr double match_tolerance = 1e-8;    // per-point error budget
constexpr double bisect_value_goal = 1e-9;  // early-exit value error
constexpr double bisect_width = 1e-12;
constexpr int bisect_max_iter = 80;

void check_profile_inputs(const std::vector<double>& times, const std::vector<double>& targets) {
    if (times.empty() || times.size() != targets.size())
        throw std::invalid_argument("match_profile: times/targets size mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("match_profile: times must be strictly ascending");
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (targets[i] > targets[i - 1] + 1e-12) {
            std::ostringstream os;
            os << "match_profile: targets must be non-increasing, first offending index "
               << i;
            throw std::invalid_argument(os.str());
        }
}

// Generic profile walk. `value(a, dt)` evaluates the figure of merit after a
// trial step from the current state; `commit(a, dt)` advances the state.
template <typename Value, typename Commit>
ProfileMatch walk_profile(const std::vector<double>& times,
                          const std::vector<double>& targets, double f0, Value value,
                          Commit commit) {
    ProfileMatch pm;
    pm.times = times;
    pm.targets = targets;
    pm.a.assign(times.size(), 1.0);
    pm.achieved.assign(times.size(), 0.0);
    pm.feasible.assign(times.size(), true);
    pm.achieved[0] = f0;
    pm.feasible[0] = std::abs(f0 - targets[0]) <= match_tolerance;

    for (std::size_t i = 1; i < times.size(); ++i) {
        const double dt = times[i] - times[i - 1];
        const double target = targets[i];
        const double v1 = value(1.0, dt);
        const double v0 = value(0.0, dt);
        double a;
        if (target >= v1) {
            a = 1.0;
        } else if (target <= v0) {
            a = 0.0;  // clamp at the depolarized floor
        } else {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < bisect_max_iter && hi - lo > bisect_width; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double v = value(mid, dt);
                if (std::abs(v - target) <= bisect_value_goal) {
                    lo = hi = mid;
                    break;
                }
                (v > target ? hi : lo) = mid;
            }
            a = 0.5 * (lo + hi);
        }
        commit(a, dt);
        pm.a[i] = a;
        pm.achieved[i] = value(1.0, dt);  // a = 1 step is the identity
        pm.feasible[i] = std::abs(pm.achieved[i] - target) <= match_tolerance;
    }
    return pm;
}

}  // namespace

ProfileMatch match_profile(const std::vector<double>& times,
                           const std::vector<double>& targets, ContractiveKind kind,
                           const DensityMatrix& rho0, const DensityMatrix& sigma0,
                           double renyi_alpha) {
    check_profile_inputs(times, targets);
    if (rho0.dims != sigma0.dims)
        throw std::invalid_argument("match_profile: state dimension mismatch");
    const std::size_t d = rho0.mat.rows();
    ComplexMatrix mu = rho0.mat, tau = sigma0.mat;
    const Dims dims = rho0.dims;
    const auto eval = [&](const ComplexMatrix& x, const ComplexMatrix& y) {
        return contractive_eval(kind, DensityMatrix{x, dims}, DensityMatrix{y, dims},
                                renyi_alpha);
    };
    const auto value = [&](double a, double dt) {
        const LinearMap w = depolarizing_step(a, dt, d);
        return eval(w(mu), w(tau));
    };
    const auto commit = [&](double a, double dt) {
        const LinearMap w = depolarizing_step(a, dt, d);
        mu = w(mu);
        tau = w(tau);
    };
    return walk_profile(times, targets, eval(mu, tau), value, commit);
}

ProfileMatch match_entanglement_profile(const std::vector<double>& times,
                                        const std::vector<double>& targets,
                                        const DensityMatrix& rho0, std::size_t cut) {
    check_profile_inputs(times, targets);
    if (rho0.dims.size() < 2)
        throw std::invalid_argument("match_entanglement_profile: need a multipartite state");
    const std::size_t d_first = rho0.dims[0];
    const std::size_t d_rest = dims_product(rho0.dims) / d_first;
    ComplexMatrix state = rho0.mat;
    const Dims dims = rho0.dims;
    const auto neg = [&](const ComplexMatrix& x) {
        return negativity(HermitianUnitTrace{x, dims}, cut);
    };
    const auto value = [&](double a, double dt) {
        const LinearMap w = extend_first(depolarizing_step(a, dt, d_first), d_first, d_rest);
        return neg(w(state));
    };
    const auto commit = [&](double a, double dt) {
        const LinearMap w = extend_first(depolarizing_step(a, dt, d_first), d_first, d_rest);
        state = w(state);
    };
    return walk_profile(times, targets, neg(state), value, commit);
}

MonotonicityReport positive_map_monotonicity_trial(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    MonotonicityReport rep;
    rep.trials = count;
    for (std::size_t k = 0; k < count; ++k) {
        const DensityMatrix rho = random_state(rng, Dims{2, 2});
        const double p = rng.uniform();
        const LinearMap e1 = channel_map(random_pauli_channel(rng));
        const LinearMap e2 = channel_map(random_pauli_channel(rng));
        const double before = negativity(rho, 1);
        const ComplexMatrix mapped =
            decomposable_positive_apply_local(p, e1, e2, rho.mat, rho.dims);
        const double after = negativity(HermitianUnitTrace{mapped, rho.dims}, 1);
        rep.max_violation = std::max(rep.max_violation, after - before);
    }
    return rep;
}

}  // namespace nmwit
