// Bell states, Bloch algebra, the contractive functions and negativity, and
// the transpose-matching unitary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "nmwit/dynamics.hpp"
#include "nmwit/eigen.hpp"
#include "nmwit/random.hpp"
#include "nmwit/states.hpp"

using namespace nmwit;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DensityMatrix ket_state(std::size_t dim, std::size_t idx) {
    ComplexMatrix m(dim, dim);
    m(idx, idx) = 1.0;
    return density_matrix(std::move(m), {dim});
}

DensityMatrix random_qubit(Rng& rng) { return random_state(rng, 2); }

// a two-qubit depolarizing channel mix for contractivity trials
ComplexMatrix depolarize(const ComplexMatrix& rho, double q) {
    return (1.0 - q) * rho + (q * rho.trace() / 2.0) * ComplexMatrix::identity(2);
}

}  // namespace

TEST_CASE("bell_state: marginals, orthogonality, Pauli shuffling") {
    const DensityMatrix phip = bell_state(BellKind::phi_plus);
    CHECK(max_abs_diff(partial_trace(phip.mat, {2, 2}, {0}),
                       0.5 * ComplexMatrix::identity(2)) < 1e-15);
    // pure and rank one
    const auto es = hermitian_eig(phip.mat);
    CHECK(es.values[3] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(es.values[2]) < 1e-14);

    const ComplexMatrix overlap =
        bell_vector(BellKind::phi_plus).dagger() * bell_vector(BellKind::phi_minus);
    CHECK(std::abs(overlap(0, 0)) < 1e-15);

    // sigma_1 on the first factor maps Phi+ to Psi+
    const ComplexMatrix moved =
        kron(pauli(1), ComplexMatrix::identity(2)) * bell_vector(BellKind::phi_plus);
    CHECK(max_abs_diff(moved * moved.dagger(), bell_state(BellKind::psi_plus).mat) < 1e-15);
}

TEST_CASE("negativity: Bell pair, product states, transposing either side") {
    CHECK(negativity(bell_state(BellKind::phi_plus), 1) ==
          doctest::Approx(0.5).epsilon(1e-12));

    Rng rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_state(rng, 2);
        const auto b = random_state(rng, 2);
        const DensityMatrix prod{kron(a.mat, b.mat), {2, 2}};
        CHECK(negativity(prod, 1) == doctest::Approx(0.0).epsilon(1e-11));
    }

    // transposing A instead of B gives the same value
    for (int rep = 0; rep < 20; ++rep) {
        const auto rho = random_state(rng, Dims{2, 2});
        const double nb = negativity(rho, 1);
        const ComplexMatrix ta = partial_transpose(rho.mat, {2, 2}, 0);
        const double na = (trace_norm(ta) - 1.0) / 2.0;
        CHECK(na == doctest::Approx(nb).epsilon(1e-11));
    }

    CHECK_THROWS_AS(negativity(bell_state(BellKind::phi_plus), 0), std::invalid_argument);
    CHECK_THROWS_AS(negativity(bell_state(BellKind::phi_plus), 2), std::invalid_argument);
}

TEST_CASE("negativity: monotone under local CPTP maps on one side") {
    Rng rng(43);
    double worst = -1.0;
    for (int rep = 0; rep < 200; ++rep) {
        const auto rho = random_state(rng, Dims{2, 2});
        const PauliChannel ch = random_pauli_channel(rng);
        ComplexMatrix mapped(4, 4);
        for (std::size_t mu = 0; mu < 4; ++mu) {
            if (ch.p[mu] == 0.0) continue;
            const ComplexMatrix op = kron(pauli(mu), ComplexMatrix::identity(2));
            mapped += ch.p[mu] * (op * rho.mat * op);
        }
        const double before = negativity(rho, 1);
        const double after = negativity(HermitianUnitTrace{mapped, {2, 2}}, 1);
        worst = std::max(worst, after - before);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("trace_distance: fixed values") {
    CHECK(trace_distance(ket_state(2, 0), ket_state(2, 1)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    Rng rng(47);
    const auto rho = random_qubit(rng);
    CHECK(trace_distance(rho, rho) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("fidelity: fixed values and the commuting oracle") {
    Rng rng(53);
    const auto rho = random_qubit(rng);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(fidelity(ket_state(2, 0), ket_state(2, 1)) ==
          doctest::Approx(0.0).epsilon(1e-11));

    // commuting diagonal pair: F = sum sqrt(p_i q_i)
    const DensityMatrix d1{{{0.75, 0.0}, {0.0, 0.25}}, {2}};
    const DensityMatrix d2{{{0.25, 0.0}, {0.0, 0.75}}, {2}};
    CHECK(fidelity(d1, d2) ==
          doctest::Approx(0.8660254037844386).epsilon(1e-12));  // sqrt(3)/2
}

TEST_CASE("relative_entropy: fixed values and the support signal") {
    Rng rng(59);
    const auto rho = random_qubit(rng);
    CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-10));

    const DensityMatrix pure{{{1.0, 0.0}, {0.0, 0.0}}, {2}};
    const DensityMatrix mixed{{{0.5, 0.0}, {0.0, 0.5}}, {2}};
    CHECK(relative_entropy(pure, mixed) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(relative_entropy(ket_state(2, 0), ket_state(2, 1)) == kInf);
}

TEST_CASE("renyi_relative: half-order equals -2 log2 F") {
    Rng rng(61);
    for (int rep = 0; rep < 30; ++rep) {
        const auto rho = random_qubit(rng);
        const auto sigma = random_qubit(rng);
        CHECK(renyi_relative(rho, sigma, 0.5) ==
              doctest::Approx(-2.0 * std::log2(fidelity(rho, sigma))).epsilon(1e-9));
    }
}

TEST_CASE("renyi_relative: zero on equal states, classical oracle, alpha guard") {
    Rng rng(67);
    const auto rho = random_qubit(rng);
    for (double alpha : {0.5, 0.8, 1.5, 2.0, 3.0})
        CHECK(renyi_relative(rho, rho, alpha) == doctest::Approx(0.0).epsilon(1e-9));

    // commuting diagonal pair matches (1/(alpha-1)) log2 sum p^alpha q^(1-alpha)
    const DensityMatrix d1{{{0.7, 0.0}, {0.0, 0.3}}, {2}};
    const DensityMatrix d2{{{0.2, 0.0}, {0.0, 0.8}}, {2}};
    for (double alpha : {0.5, 0.75, 2.0, 3.0}) {
        const double classical =
            std::log2(std::pow(0.7, alpha) * std::pow(0.2, 1.0 - alpha) +
                      std::pow(0.3, alpha) * std::pow(0.8, 1.0 - alpha)) /
            (alpha - 1.0);
        CHECK(renyi_relative(d1, d2, alpha) == doctest::Approx(classical).epsilon(1e-10));
    }

    CHECK_THROWS_AS(renyi_relative(d1, d2, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(renyi_relative(d1, d2, 1.0), std::invalid_argument);
}

TEST_CASE("renyi_relative: alpha -> 1 recovers the relative entropy") {
    // one-sided values deviate linearly in (alpha - 1); their symmetric
    // average cancels the linear term
    Rng rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        const auto rho = random_qubit(rng);
        const auto sigma = random_qubit(rng);
        const double avg = 0.5 * (renyi_relative(rho, sigma, 1.0 + 1e-4) +
                                  renyi_relative(rho, sigma, 1.0 - 1e-4));
        CHECK(avg == doctest::Approx(relative_entropy(rho, sigma)).epsilon(1e-6));
    }
}

TEST_CASE("von_neumann_entropy: pure, maximally mixed, binary") {
    Rng rng(73);
    const auto g = random_state(rng, 2, 1);  // rank one
    CHECK(von_neumann_entropy(g) == doctest::Approx(0.0).epsilon(1e-9));
    const DensityMatrix mixed{{{0.5, 0.0}, {0.0, 0.5}}, {2}};
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));
    const DensityMatrix binary{{{0.75, 0.0}, {0.0, 0.25}}, {2}};
    CHECK(von_neumann_entropy(binary) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("bloch: fixed vectors, round trip, transpose reflection") {
    const BlochVector mixed = bloch(DensityMatrix{{{0.5, 0.0}, {0.0, 0.5}}, {2}});
    CHECK(std::abs(mixed.x) + std::abs(mixed.y) + std::abs(mixed.z) < 1e-15);
    const BlochVector up = bloch(ket_state(2, 0));
    CHECK(up.z == doctest::Approx(1.0).epsilon(1e-14));

    Rng rng(79);
    for (int rep = 0; rep < 25; ++rep) {
        const auto rho = random_qubit(rng);
        const BlochVector r = bloch(rho);
        CHECK(std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z) <= 1.0 + 1e-10);
        CHECK(max_abs_diff(bloch_state(r).mat, rho.mat) < 1e-12);
        // transpose reflects the y component
        const BlochVector rt = bloch(DensityMatrix{rho.mat.transpose(), {2}});
        CHECK(rt.x == doctest::Approx(r.x).epsilon(1e-13));
        CHECK(rt.y == doctest::Approx(-r.y).epsilon(1e-13));
        CHECK(rt.z == doctest::Approx(r.z).epsilon(1e-13));
    }

    const DensityMatrix ypol = bloch_state({0.0, 1.0, 0.0});
    const BlochVector yt = bloch(DensityMatrix{ypol.mat.transpose(), {2}});
    CHECK(yt.y == doctest::Approx(-1.0).epsilon(1e-14));

    CHECK_THROWS_AS(bloch(random_state(rng, 3)), std::invalid_argument);
}

TEST_CASE("transpose_unitary: x-z plane pairs need no rotation") {
    const DensityMatrix rho = bloch_state({0.3, 0.0, 0.5});
    const DensityMatrix sigma = bloch_state({-0.2, 0.0, 0.1});
    const ComplexMatrix u = transpose_unitary(rho, sigma);
    CHECK(max_abs_diff(u, ComplexMatrix::identity(2)) < 1e-12);
}

TEST_CASE("transpose_unitary: pure-y pair is handled by sigma_x") {
    const DensityMatrix rho = bloch_state({0.0, 1.0, 0.0});
    const ComplexMatrix u = transpose_unitary(rho, rho);
    CHECK(max_abs_diff(u * rho.mat * u.dagger(), rho.mat.transpose()) < 1e-12);
}

TEST_CASE("transpose_unitary: 500 random pairs, degenerate cases included") {
    Rng rng(83);
    double worst = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
        DensityMatrix rho = random_qubit(rng);
        DensityMatrix sigma = random_qubit(rng);
        if (rep % 7 == 0) sigma = rho;
        if (rep % 11 == 0) {  // parallel Bloch vectors
            const BlochVector r = bloch(rho);
            sigma = bloch_state({0.4 * r.x, 0.4 * r.y, 0.4 * r.z});
        }
        if (rep % 13 == 0) rho = bloch_state({0.0, 0.0, 0.0});
        const ComplexMatrix u = transpose_unitary(rho, sigma);
        worst = std::max(worst, max_abs_diff(u.dagger() * u, ComplexMatrix::identity(2)));
        worst = std::max(worst, max_abs_diff(u * rho.mat * u.dagger(), rho.mat.transpose()));
        worst = std::max(worst,
                         max_abs_diff(u * sigma.mat * u.dagger(), sigma.mat.transpose()));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("transpose_unitary: preserves Bloch lengths and the pair angle") {
    Rng rng(89);
    for (int rep = 0; rep < 100; ++rep) {
        const auto rho = random_qubit(rng);
        const auto sigma = random_qubit(rng);
        const ComplexMatrix u = transpose_unitary(rho, sigma);
        const auto r0 = bloch(rho);
        const auto s0 = bloch(sigma);
        const auto r1 = bloch(DensityMatrix{u * rho.mat * u.dagger(), {2}});
        const auto s1 = bloch(DensityMatrix{u * sigma.mat * u.dagger(), {2}});
        const auto len = [](const BlochVector& v) {
            return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
        };
        const auto dot = [](const BlochVector& a, const BlochVector& b) {
            return a.x * b.x + a.y * b.y + a.z * b.z;
        };
        CHECK(len(r1) == doctest::Approx(len(r0)).epsilon(1e-10));
        CHECK(len(s1) == doctest::Approx(len(s0)).epsilon(1e-10));
        CHECK(dot(r1, s1) == doctest::Approx(dot(r0, s0)).epsilon(1e-10));
    }
}

TEST_CASE("contractive functions: monotone under CPTP, invariant under unitaries") {
    Rng rng(97);
    double worst = -1.0;
    for (int rep = 0; rep < 120; ++rep) {
        const auto rho = random_qubit(rng);
        const auto sigma = random_qubit(rng);
        // random Pauli channel or a depolarizing mix
        ComplexMatrix mr, ms;
        if (rep % 2 == 0) {
            const PauliChannel ch = random_pauli_channel(rng);
            mr = apply_pauli(ch, rho.mat);
            ms = apply_pauli(ch, sigma.mat);
        } else {
            const double q = rng.uniform();
            mr = depolarize(rho.mat, q);
            ms = depolarize(sigma.mat, q);
        }
        const DensityMatrix r2{mr, {2}}, s2{ms, {2}};

        const double before[4] = {trace_distance(rho, sigma),
                                  1.0 - fidelity(rho, sigma),
                                  relative_entropy(rho, sigma),
                                  renyi_relative(rho, sigma, 2.0)};
        const double after[4] = {trace_distance(r2, s2), 1.0 - fidelity(r2, s2),
                                 relative_entropy(r2, s2), renyi_relative(r2, s2, 2.0)};
        for (int k = 0; k < 4; ++k) worst = std::max(worst, after[k] - before[k]);

        // joint unitary conjugation changes nothing
        const ComplexMatrix u = random_unitary(rng, 2);
        const DensityMatrix ru{u * rho.mat * u.dagger(), {2}};
        const DensityMatrix su{u * sigma.mat * u.dagger(), {2}};
        CHECK(trace_distance(ru, su) ==
              doctest::Approx(before[0]).epsilon(1e-10));
        CHECK(1.0 - fidelity(ru, su) == doctest::Approx(before[1]).epsilon(1e-10));
        CHECK(relative_entropy(ru, su) == doctest::Approx(before[2]).epsilon(1e-9));
        CHECK(renyi_relative(ru, su, 2.0) == doctest::Approx(before[3]).epsilon(1e-9));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("density_matrix factory rejects invalid inputs") {
    ComplexMatrix bad_trace = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(density_matrix(bad_trace, {2}), std::invalid_argument);
    ComplexMatrix negative{{1.5, 0.0}, {0.0, -0.5}};
    CHECK_THROWS_AS(density_matrix(negative, {2}), std::invalid_argument);
}
