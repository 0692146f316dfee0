// witness.hpp — the constructive tripartite negativity witness for ENM
// dynamics: initial qubit-qutrit states pulled back through the inverse map,
// the (A, B1, B2, C) tripartite state, its negativity by definition and by
// the trace-norm shortcut, the analytic trace-distance curve with its branch
// structure, and the entropy-based distillability check.

#pragma once

#include <optional>

#include "nmwit/dynamics.hpp"
#include "nmwit/states.hpp"

namespace nmwit {

struct WitnessScenario {
    ENMParams params;
    double t_star = 1.0;
    double lambda_star = 0.0;          // 1 / (3 e^{2 alpha c t*} - 2)
    double chi = 0.0;                  // ((1+2l)/l)^{1/a}/2 + 3^{1/a}/2
    DensityMatrix rho1;                // pullback of (1-l) I/6 + l |Phi+><Phi+|
    DensityMatrix rho2;                // pullback of (1-l) I/6 + l |0><0| (x) |2><2|
    std::optional<double> t_up;        // root of R(t,t*) = 1 past t*, if any
};

double lambda_star_closed(const ENMParams& p, double t_star);

WitnessScenario build_scenario(const ENMParams& p, double t_star);

// rho^{ABC} = (rho1 (x) Psi+ + rho2 (x) Psi-)/2 on dims (2,3,2,2)
DensityMatrix tripartite_initial(const WitnessScenario& s);

// Lambda_t^A (x) 1 applied to the tripartite initial state
DensityMatrix evolve(const WitnessScenario& s, double t);

enum class NegativityMethod { full, shortcut };

// E^{AB|C}(tau_t): `full` transposes C on the 24x24 state, `shortcut`
// evaluates (1/2)||Lambda_t (x) 1_3 [(rho1 - rho2)/2]||_1 on 6x6.
double witness_negativity(const WitnessScenario& s, double t, NegativityMethod m);

// R(t,t*) = (cosh(ct*) sech(ct))^{-alpha} / cosh(alpha c (t - t*))
double witness_ratio(const WitnessScenario& s, double t);

// ||rho1(t) - rho2(t)||_1 in closed form (three branches, kink at t*,
// constant 2 lambda* past t_up). Equals 4x the witness negativity.
double analytic_trace_distance(const WitnessScenario& s, double t);

// right derivative at t*+ of the plotted curve ||rho1(t)-rho2(t)||_1 / 2:
// alpha c lambda* tanh(c t*) / 2, strictly positive for t* > 0
double right_derivative(const WitnessScenario& s);

struct DistillabilityReport {
    double s_ab = 0.0;   // S(rho^{AB})
    double s_abc = 0.0;  // S(rho^{ABC})
    double margin = 0.0; // s_ab - s_abc; > 0 certifies distillable AB|C entanglement
};

DistillabilityReport distillability_check(const DensityMatrix& tripartite);

}  // namespace nmwit
