// states.hpp — quantum states and the two-state functionals used throughout:
// Bell states, Bloch-vector algebra, negativity, trace distance, fidelity,
// relative and Renyi relative entropies, and the transpose-matching unitary.

#pragma once

#include "nmwit/complex_matrix.hpp"
#include "nmwit/eigen.hpp"

namespace nmwit {

// sigma_0..sigma_3 (identity, x, y, z)
const ComplexMatrix& pauli(std::size_t mu);

struct DensityMatrix {
    ComplexMatrix mat;
    Dims dims;
};

// Hermitian, unit trace, possibly non-PSD. Negativity is evaluated on these
// as well, since locally transposed states can leave the state space.
struct HermitianUnitTrace {
    ComplexMatrix mat;
    Dims dims;
};

// Validating factories. density_matrix additionally requires the minimum
// eigenvalue to be >= -1e-10.
DensityMatrix density_matrix(ComplexMatrix m, Dims dims);
HermitianUnitTrace hermitian_unit_trace(ComplexMatrix m, Dims dims);

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

// |psi><psi| as a two-qubit DensityMatrix.
DensityMatrix bell_state(BellKind kind);
// the ket itself, as a 4x1 column
ComplexMatrix bell_vector(BellKind kind);

// E^{A|B} = (||rho^{T_B}|| _1 - 1)/2 where A is the first `cut` tensor
// factors and B (everything from `cut` on) is transposed.
double negativity(const HermitianUnitTrace& h, std::size_t cut);
double negativity(const DensityMatrix& rho, std::size_t cut);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// F = ||sqrt(rho) sqrt(sigma)||_1, in [0,1]
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// S(rho||sigma), base 2. Support violations (rho outside supp sigma) yield
// +infinity rather than an error so scans survive pure states.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Sandwiched Renyi relative entropy D_alpha, alpha >= 1/2, alpha != 1
// (at alpha = 1 use relative_entropy). Support violations for alpha > 1
// yield +infinity.
double renyi_relative(const DensityMatrix& rho, const DensityMatrix& sigma,
                      double alpha);

double von_neumann_entropy(const DensityMatrix& rho);

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;
};

BlochVector bloch(const DensityMatrix& rho);       // single qubit only
DensityMatrix bloch_state(const BlochVector& r);   // (I + r.sigma)/2

// A 2x2 unitary with U rho U^dag = rho^T and U sigma U^dag = sigma^T.
// Transposition reflects Bloch vectors through the x-z plane; the reflection
// restricted to the two given vectors is completed to a proper rotation and
// lifted to SU(2). Degenerate inputs (zero or parallel Bloch vectors) take
// the smallest-angle rotation, with U = I when nothing needs to move.
ComplexMatrix transpose_unitary(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace nmwit
