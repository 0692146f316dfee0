// Dense complex linear algebra: Kronecker products, the Jacobi eigensolver,
// trace norm, partial trace and partial transpose.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nmwit/complex_matrix.hpp"
#include "nmwit/eigen.hpp"
#include "nmwit/random.hpp"
#include "nmwit/states.hpp"

using namespace nmwit;

namespace {

ComplexMatrix ket(std::size_t dim, std::size_t idx) {
    ComplexMatrix v(dim, 1);
    v(idx, 0) = 1.0;
    return v;
}

ComplexMatrix projector(std::size_t dim, std::size_t idx) {
    const ComplexMatrix v = ket(dim, idx);
    return v * v.dagger();
}

}  // namespace

TEST_CASE("kron: identity and basis projectors") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    // |0><0| (x) |1><1| = diag(0,1,0,0) in the {00,01,10,11} basis
    const ComplexMatrix p = kron(projector(2, 0), projector(2, 1));
    ComplexMatrix expect(4, 4);
    expect(1, 1) = 1.0;
    CHECK(max_abs_diff(p, expect) == 0.0);
}

TEST_CASE("kron: entrywise brute force and mixed-product rule") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a(i, j) = rng.complex_gaussian();
                b(i, j) = rng.complex_gaussian();
                c(i, j) = rng.complex_gaussian();
                d(i, j) = rng.complex_gaussian();
            }
        const ComplexMatrix k = kron(a, b);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k1 = 0; k1 < 2; ++k1)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t l = 0; l < 2; ++l)
                        CHECK(std::abs(k(2 * i + k1, 2 * j + l) - a(i, j) * b(k1, l)) == 0.0);
        // (a (x) b)(c (x) d) = ac (x) bd
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("hermitian_eig: fixed spectra") {
    const ComplexMatrix diag{{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}};
    const auto es = hermitian_eig(diag);
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(es.values[2] == doctest::Approx(3.0).epsilon(1e-14));

    const auto ex = hermitian_eig(pauli(1));
    CHECK(ex.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ex.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input with diagnostic") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;  // strictly upper triangular
    CHECK_THROWS_WITH_AS(hermitian_eig(m),
                         doctest::Contains("max|M - M^dag| = 1"), std::invalid_argument);
}

TEST_CASE("hermitian_eig: random 8x8 reconstruction") {
    Rng rng(11);
    const ComplexMatrix h = random_hermitian(rng, 8);
    const auto es = hermitian_eig(h);
    ComplexMatrix recon(8, 8);
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                recon(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
    CHECK(max_abs_diff(recon, h) < 1e-9 * h.max_abs());
}

TEST_CASE("hermitian_eig: 1000 random matrices, dims 2..24") {
    Rng rng(13);
    double worst_recon = 0.0, worst_ortho = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 23.0);
        const ComplexMatrix h = random_hermitian(rng, n);
        const auto es = hermitian_eig(h);
        for (std::size_t k = 1; k < n; ++k) CHECK(es.values[k] >= es.values[k - 1]);
        const ComplexMatrix vv = es.vectors.dagger() * es.vectors;
        worst_ortho = std::max(worst_ortho,
                               max_abs_diff(vv, ComplexMatrix::identity(n)));
        ComplexMatrix lam(n, n);
        for (std::size_t k = 0; k < n; ++k) lam(k, k) = es.values[k];
        const ComplexMatrix recon = es.vectors * lam * es.vectors.dagger();
        worst_recon = std::max(worst_recon, max_abs_diff(recon, h) / h.max_abs());
    }
    CHECK(worst_ortho < 1e-10);
    CHECK(worst_recon < 1e-9);
}

TEST_CASE("trace_norm: fixed values") {
    CHECK(trace_norm(pauli(3)) == doctest::Approx(2.0).epsilon(1e-14));
    // any density matrix has trace norm 1
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const auto rho = random_state(rng, 4);
        CHECK(trace_norm(rho.mat) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("trace_norm: partial transpose of a Bell state") {
    // eigenvalues of Phi+^{T_B} are {1/2, 1/2, 1/2, -1/2}
    const ComplexMatrix pt =
        partial_transpose(bell_state(BellKind::phi_plus).mat, {2, 2}, 1);
    const auto es = hermitian_eig(pt);
    CHECK(es.values[0] == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(es.values[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(es.values[3] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("trace_norm: unitary invariance") {
    Rng rng(19);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7.0);
        const ComplexMatrix h = random_hermitian(rng, n);
        const ComplexMatrix u = random_unitary(rng, n);
        CHECK(trace_norm(u * h * u.dagger()) ==
              doctest::Approx(trace_norm(h)).epsilon(1e-10));
    }
}

TEST_CASE("partial_trace: product and entangled marginals") {
    Rng rng(23);
    const auto ra = random_state(rng, 2);
    const auto rb = random_state(rng, 3);
    const ComplexMatrix prod = kron(ra.mat, rb.mat);
    CHECK(max_abs_diff(partial_trace(prod, {2, 3}, {0}), ra.mat) < 1e-14);
    CHECK(max_abs_diff(partial_trace(prod, {2, 3}, {1}), rb.mat) < 1e-14);

    const ComplexMatrix half_i2 = 0.5 * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(bell_state(BellKind::phi_plus).mat, {2, 2}, {0}),
                       half_i2) < 1e-15);
}

TEST_CASE("partial_trace: composition over a random tripartite state") {
    Rng rng(29);
    const auto rho = random_state(rng, Dims{2, 3, 2});
    // tracing factor 2 then factor 1 equals tracing {1,2} jointly
    const ComplexMatrix step1 = partial_trace(rho.mat, {2, 3, 2}, {0, 1});
    const ComplexMatrix step2 = partial_trace(step1, {2, 3}, {0});
    const ComplexMatrix joint = partial_trace(rho.mat, {2, 3, 2}, {0});
    CHECK(max_abs_diff(step2, joint) < 1e-14);
    CHECK(step2.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("partial_trace: dimension mismatch raises") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), {2, 2}, {0}),
                    std::invalid_argument);
}

TEST_CASE("partial_transpose: product states and the SWAP identity") {
    Rng rng(31);
    const auto ra = random_state(rng, 2);
    const auto rb = random_state(rng, 2);
    const ComplexMatrix prod = kron(ra.mat, rb.mat);
    CHECK(max_abs_diff(partial_transpose(prod, {2, 2}, 1),
                       kron(ra.mat, rb.mat.transpose())) < 1e-15);

    // Phi+^{T_B} = SWAP/2, entrywise
    ComplexMatrix swap(4, 4);
    swap(0, 0) = swap(3, 3) = 1.0;
    swap(1, 2) = swap(2, 1) = 1.0;
    CHECK(max_abs_diff(partial_transpose(bell_state(BellKind::phi_plus).mat, {2, 2}, 1),
                       0.5 * swap) < 1e-15);
}

TEST_CASE("partial_transpose: involution and trace preservation") {
    Rng rng(37);
    for (int rep = 0; rep < 25; ++rep) {
        const auto rho = random_state(rng, Dims{2, 3});
        const ComplexMatrix pt = partial_transpose(rho.mat, {2, 3}, 1);
        CHECK(max_abs_diff(partial_transpose(pt, {2, 3}, 1), rho.mat) == 0.0);
        CHECK(std::abs(pt.trace() - rho.mat.trace()) < 1e-12);
        // eigenvalue sum (trace) preserved
        double sum = 0.0;
        for (double w : hermitian_eig(pt).values) sum += w;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}
