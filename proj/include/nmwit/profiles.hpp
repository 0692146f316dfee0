// profiles.hpp — contractive-function scans under ENM dynamics, Markovian
// mimicry of monotone profiles by stepwise depolarizing channels, and
// negativity-monotonicity trials under local decomposable positive maps.

#pragma once

#include <cstdint>
#include <vector>

#include "nmwit/divisibility.hpp"
#include "nmwit/dynamics.hpp"
#include "nmwit/states.hpp"

namespace nmwit {

enum class ContractiveKind { trace_distance, infidelity, relative_entropy, renyi };

double contractive_eval(ContractiveKind kind, const DensityMatrix& rho,
                        const DensityMatrix& sigma, double renyi_alpha = 2.0);

// f(Lambda_t[rho], Lambda_t[sigma]) over an ascending grid
std::vector<double> contractive_scan(ContractiveKind kind, const ENMParams& p,
                                     const DensityMatrix& rho, const DensityMatrix& sigma,
                                     const std::vector<double>& grid,
                                     double renyi_alpha = 2.0);

// W[rho] = a^dt rho + (1 - a^dt) Tr(rho) I_d / d; CPTP for a in [0,1]
LinearMap depolarizing_step(double a, double dt, std::size_t d);

struct ProfileMatch {
    std::vector<double> times;
    std::vector<double> targets;
    std::vector<double> a;         // per-step mixing parameters, a[0] unused (= 1)
    std::vector<double> achieved;
    std::vector<bool> feasible;    // per-point: target reachable within 1e-8

    bool all_matched() const;
};

// Reproduce a non-increasing target profile of f by choosing a_i per step.
// Targets below the fully depolarized floor are clamped to a_i = 0 and
// flagged infeasible; the walk continues from the clamped state.
ProfileMatch match_profile(const std::vector<double>& times,
                           const std::vector<double>& targets, ContractiveKind kind,
                           const DensityMatrix& rho0, const DensityMatrix& sigma0,
                           double renyi_alpha = 2.0);

// Same machinery for E^{AB|C} with the depolarizing family acting locally on
// the first factor; `cut` as in negativity.
ProfileMatch match_entanglement_profile(const std::vector<double>& times,
                                        const std::vector<double>& targets,
                                        const DensityMatrix& rho0, std::size_t cut);

struct MonotonicityReport {
    std::size_t trials = 0;
    double max_violation = 0.0;  // max over trials of E(after) - E(before)
};

// Random two-qubit states under random local maps p E1 + (1-p) E2 o T:
// negativity must never increase.
MonotonicityReport positive_map_monotonicity_trial(std::size_t count, std::uint64_t seed);

}  // namespace nmwit
