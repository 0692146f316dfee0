// eigen.hpp — Hermitian eigendecomposition (cyclic complex Jacobi) and the
// spectral helpers built on it: trace norm, matrix functions, extremal
// eigenvalues.

#pragma once

#include <functional>
#include <vector>

#include "nmwit/complex_matrix.hpp"

namespace nmwit {

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, H = V diag(values) V^dag
};

// Tolerance on max|M - M^dag| accepted by the Hermitian routines. Inputs
// within it are symmetrized to (M + M^dag)/2 before solving; anything worse
// is rejected with the measured asymmetry in the diagnostic.
inline constexpr double hermitian_tolerance = 1e-12;

EigenSystem hermitian_eig(const ComplexMatrix& h);

// ||h||_1 = sum |eigenvalue| (Hermitian inputs only).
double trace_norm(const ComplexMatrix& h);

double min_eigenvalue(const ComplexMatrix& h);

// V f(diag) V^dag
ComplexMatrix spectral_apply(const ComplexMatrix& h,
                             const std::function<double(double)>& f);

}  // namespace nmwit
