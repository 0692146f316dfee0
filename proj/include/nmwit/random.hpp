// random.hpp — seeded sampling of states, Hermitian matrices, unitaries and
// channels. Uniform and normal variates are derived from mt19937_64 output
// explicitly (not via std distributions) so that a fixed seed produces
// identical bytes on every platform.

#pragma once

#include <cstdint>
#include <random>

#include "nmwit/complex_matrix.hpp"
#include "nmwit/dynamics.hpp"
#include "nmwit/states.hpp"

namespace nmwit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();                       // [0, 1)
    double normal();                        // Box-Muller, cached spare
    cxd complex_gaussian();                 // standard complex normal

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

ComplexMatrix random_hermitian(Rng& rng, std::size_t n);

// eigenvector matrix of a random Hermitian
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

// purification sampling: G is n x ancilla complex Gaussian, rho = GG^dag
// normalized; full rank for ancilla >= n
DensityMatrix random_state(Rng& rng, std::size_t n, std::size_t ancilla = 0);
DensityMatrix random_state(Rng& rng, const Dims& dims);

PauliChannel random_pauli_channel(Rng& rng);

}  // namespace nmwit
