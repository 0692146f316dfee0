// divisibility.hpp — Choi-Jamiolkowski machinery: CJ matrices of linear maps,
// map action through the CJ matrix, the ENM intermediate map V_{t,s} in closed
// form with its convex decomposition, and decomposable positive maps.

#pragma once

#include <functional>

#include "nmwit/complex_matrix.hpp"
#include "nmwit/dynamics.hpp"

namespace nmwit {

// Maps are handled operationally, by their action on matrices, so inverse
// (quasi-channel) maps are first class.
using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

LinearMap channel_map(const PauliChannel& ch);

// map (x) identity on the leftmost factor of dimension d_first, acting on
// (d_first * d_rest)-dimensional operators
LinearMap extend_first(const LinearMap& map, std::size_t d_first, std::size_t d_rest);

// "Effective" CJ normalization: Omega = (map (x) 1)[d |Phi+><Phi+|], so
// trace(Omega) = d and Tr_A(Omega) = I_d for trace-preserving maps.
struct ChoiMatrix {
    std::size_t dim = 0;
    ComplexMatrix mat;
};

// Builds the CJ matrix and validates Hermiticity (1e-10), trace d (1e-10)
// and trace preservation (Tr_A residual <= 1e-9).
ChoiMatrix choi_of(const LinearMap& map, std::size_t d);

// Lambda[rho] = Tr_B{ Omega (1 (x) rho^T) }
ComplexMatrix apply_via_choi(const ChoiMatrix& omega, const ComplexMatrix& rho);

// Closed-form CJ matrix of V_{t,s} = Lambda_t o Lambda_s^{-1} for the ENM
// model, 0 <= s <= t. Equals choi_of of the composed map; P_{Phi+} at s = t.
ChoiMatrix enm_intermediate_choi(const ENMParams& p, double s, double t);

struct CpVerdict {
    bool cp = false;
    double min_eigenvalue = 0.0;
};

CpVerdict is_cp(const ChoiMatrix& omega, double tol = 1e-10);

// Omega_{V_{t,s}} = p1 P_{Phi+} + p2 P_{Phi-} + (1 - p1 - p2) P_{Psi+}^{T_B}
struct DecompositionWitness {
    double p1 = 0.0;
    double p2 = 0.0;
    double residual = 0.0;  // max-abs reconstruction error
};

DecompositionWitness enm_decomposition(const ENMParams& p, double s, double t);

// V[rho] = p E1[rho] + (1-p) E2[rho^T]; positivity- and trace-preserving for
// CPTP E1, E2.
ComplexMatrix decomposable_positive_apply(double p, const LinearMap& e1,
                                          const LinearMap& e2, const ComplexMatrix& rho);

// local version (P^A (x) 1)[rho]: the transpose acts on the A factor only
ComplexMatrix decomposable_positive_apply_local(double p, const LinearMap& e1,
                                                const LinearMap& e2,
                                                const ComplexMatrix& rho,
                                                const Dims& dims);

// The indecomposable positive qutrit map used as a fixture: positive and
// trace-preserving, yet its CJ matrix has a negative eigenvalue.
ComplexMatrix choi_map_3(const ComplexMatrix& rho);

}  // namespace nmwit
