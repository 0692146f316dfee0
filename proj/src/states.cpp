#include "nmwit/states.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nmwit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double support_tolerance = 1e-12;  // eigenvalues below this count as zero

void check_same_dims(const DensityMatrix& a, const DensityMatrix& b, const char* who) {
    if (a.dims != b.dims) {
        std::ostringstream os;
        os << who << ": dimension mismatch";
        throw std::invalid_argument(os.str());
    }
}

void check_qubit(const DensityMatrix& rho, const char* who) {
    if (rho.mat.rows() != 2) {
        std::ostringstream os;
        os << who << ": expected a single-qubit state";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

const ComplexMatrix& pauli(std::size_t mu) {
    static const std::array<ComplexMatrix, 4> sig = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, cxd(0.0, -1.0)}, {cxd(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (mu > 3) throw std::invalid_argument("pauli: index out of range");
    return sig[mu];
}

DensityMatrix density_matrix(ComplexMatrix m, Dims dims) {
    if (m.rows() != m.cols() || dims_product(dims) != m.rows())
        throw std::invalid_argument("density_matrix: dims do not match the matrix");
    const double asym = m.max_asymmetry();
    if (asym > 1e-12) {
        std::ostringstream os;
        os << "density_matrix: not Hermitian, max|M - M^dag| = " << asym;
        throw std::invalid_argument(os.str());
    }
    if (std::abs(m.trace() - cxd(1.0)) > 1e-12)
        throw std::invalid_argument("density_matrix: trace differs from 1");
    if (min_eigenvalue(m) < -1e-10)
        throw std::invalid_argument("density_matrix: negative eigenvalue");
    return DensityMatrix{std::move(m), std::move(dims)};
}

HermitianUnitTrace hermitian_unit_trace(ComplexMatrix m, Dims dims) {
    if (m.rows() != m.cols() || dims_product(dims) != m.rows())
        throw std::invalid_argument("hermitian_unit_trace: dims do not match the matrix");
    if (m.max_asymmetry() > 1e-12)
        throw std::invalid_argument("hermitian_unit_trace: not Hermitian");
    if (std::abs(m.trace() - cxd(1.0)) > 1e-12)
        throw std::invalid_argument("hermitian_unit_trace: trace differs from 1");
    return HermitianUnitTrace{std::move(m), std::move(dims)};
}

ComplexMatrix bell_vector(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix v(4, 1);
    switch (kind) {
        case BellKind::phi_plus:  v(0, 0) = r; v(3, 0) = r; break;
        case BellKind::phi_minus: v(0, 0) = r; v(3, 0) = -r; break;
        case BellKind::psi_plus:  v(1, 0) = r; v(2, 0) = r; break;
        case BellKind::psi_minus: v(1, 0) = r; v(2, 0) = -r; break;
    }
    return v;
}

DensityMatrix bell_state(BellKind kind) {
    const ComplexMatrix v = bell_vector(kind);
    return density_matrix(v * v.dagger(), {2, 2});
}

double negativity(const HermitianUnitTrace& h, std::size_t cut) {
    if (cut == 0 || cut >= h.dims.size())
        throw std::invalid_argument("negativity: cut must split the factors in two");
    ComplexMatrix m = h.mat;
    for (std::size_t s = cut; s < h.dims.size(); ++s) m = partial_transpose(m, h.dims, s);
    return (trace_norm(m) - 1.0) / 2.0;
}

double negativity(const DensityMatrix& rho, std::size_t cut) {
    return negativity(HermitianUnitTrace{rho.mat, rho.dims}, cut);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_same_dims(rho, sigma, "trace_distance");
    return 0.5 * trace_norm(rho.mat - sigma.mat);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_same_dims(rho, sigma, "fidelity");
    if (min_eigenvalue(rho.mat) < -1e-10 || min_eigenvalue(sigma.mat) < -1e-10)
        throw std::invalid_argument("fidelity: inputs must be positive semidefinite");
    const auto sqrt_clamped = [](double w) { return w > 0.0 ? std::sqrt(w) : 0.0; };
    const ComplexMatrix root = spectral_apply(rho.mat, sqrt_clamped);
    const auto es = hermitian_eig(root * sigma.mat * root);
    double f = 0.0;
    for (double w : es.values) f += sqrt_clamped(w);
    return f;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_same_dims(rho, sigma, "relative_entropy");
    const auto er = hermitian_eig(rho.mat);
    const auto es = hermitian_eig(sigma.mat);
    const std::size_t n = rho.mat.rows();
    double s = 0.0;
    for (double w : er.values)
        if (w > support_tolerance) s += w * std::log2(w);
    for (std::size_t j = 0; j < n; ++j) {
        // <v_j| rho |v_j>
        cxd col = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                col += std::conj(es.vectors(i, j)) * rho.mat(i, k) * es.vectors(k, j);
        const double overlap = col.real();
        if (es.values[j] > support_tolerance) {
            s -= overlap * std::log2(es.values[j]);
        } else if (overlap > support_tolerance) {
            return kInf;  // rho has weight outside supp(sigma)
        }
    }
    return std::max(s, 0.0);
}

double renyi_relative(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
    check_same_dims(rho, sigma, "renyi_relative");
    if (alpha < 0.5) throw std::invalid_argument("renyi_relative: alpha must be >= 1/2");
    if (alpha == 1.0)
        throw std::invalid_argument("renyi_relative: alpha = 1 is relative_entropy");
    const double beta = (1.0 - alpha) / (2.0 * alpha);
    if (alpha > 1.0) {
        // negative power of sigma: rho must live inside supp(sigma)
        const auto es = hermitian_eig(sigma.mat);
        const std::size_t n = sigma.mat.rows();
        for (std::size_t j = 0; j < n; ++j) {
            if (es.values[j] > support_tolerance) continue;
            cxd col = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    col += std::conj(es.vectors(i, j)) * rho.mat(i, k) * es.vectors(k, j);
            if (col.real() > support_tolerance) return kInf;
        }
    }
    const ComplexMatrix sb = spectral_apply(sigma.mat, [&](double w) {
        return w > support_tolerance ? std::pow(w, beta) : 0.0;
    });
    const auto em = hermitian_eig(sb * rho.mat * sb);
    double tr = 0.0;
    for (double w : em.values)
        if (w > 0.0) tr += std::pow(w, alpha);
    if (tr <= 0.0) return kInf;  // orthogonal supports, alpha < 1
    return std::log2(tr) / (alpha - 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto es = hermitian_eig(rho.mat);
    if (es.values.front() < -1e-10)
        throw std::invalid_argument("von_neumann_entropy: input not positive semidefinite");
    double s = 0.0;
    for (double w : es.values)
        if (w > support_tolerance) s -= w * std::log2(w);
    return std::max(s, 0.0);
}

BlochVector bloch(const DensityMatrix& rho) {
    check_qubit(rho, "bloch");
    BlochVector r;
    r.x = (rho.mat * pauli(1)).trace().real();
    r.y = (rho.mat * pauli(2)).trace().real();
    r.z = (rho.mat * pauli(3)).trace().real();
    return r;
}

DensityMatrix bloch_state(const BlochVector& r) {
    ComplexMatrix m = 0.5 * (ComplexMatrix::identity(2) + r.x * pauli(1) +
                             r.y * pauli(2) + r.z * pauli(3));
    return density_matrix(std::move(m), {2});
}

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 reflect_y(const Vec3& a) { return {a[0], -a[1], a[2]}; }

using Mat3 = std::array<Vec3, 3>;  // rows

// columns e1 | e2 | e3: right-handed orthonormal frame from two independent vectors
Mat3 frame_columns(const Vec3& u, const Vec3& v) {
    const Vec3 e1 = scale(u, 1.0 / norm3(u));
    Vec3 w = sub(v, scale(e1, dot(v, e1)));
    const Vec3 e2 = scale(w, 1.0 / norm3(w));
    const Vec3 e3 = cross(e1, e2);
    return {Vec3{e1[0], e2[0], e3[0]}, Vec3{e1[1], e2[1], e3[1]}, Vec3{e1[2], e2[2], e3[2]}};
}

Mat3 mat_mul_t(const Mat3& a, const Mat3& b) {  // a * b^T (rows of both are rows)
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            r[i][j] = 0.0;
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[j][k];
        }
    return r;
}

Mat3 axis_angle(const Vec3& axis_in, double ang) {
    const Vec3 n = scale(axis_in, 1.0 / norm3(axis_in));
    const double c = std::cos(ang), s = std::sin(ang), o = 1.0 - c;
    return {Vec3{c + n[0] * n[0] * o, n[0] * n[1] * o - n[2] * s, n[0] * n[2] * o + n[1] * s},
            Vec3{n[1] * n[0] * o + n[2] * s, c + n[1] * n[1] * o, n[1] * n[2] * o - n[0] * s},
            Vec3{n[2] * n[0] * o - n[1] * s, n[2] * n[1] * o + n[0] * s, c + n[2] * n[2] * o}};
}

Mat3 identity3() { return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}; }

// smallest rotation with R v = reflect_y(v)
Mat3 single_vector_rotation(const Vec3& v, double tol) {
    const Vec3 vt = reflect_y(v);
    const Vec3 c = cross(v, vt);
    if (norm3(c) <= tol * dot(v, v)) {
        if (dot(v, vt) >= 0.0) return identity3();        // y-component ~ 0, already fixed
        return axis_angle({1.0, 0.0, 0.0}, M_PI);         // v along y: pi-turn about x
    }
    const double ang = std::atan2(norm3(c), dot(v, vt));
    return axis_angle(c, ang);
}

Mat3 transpose_rotation(const Vec3& r, const Vec3& s) {
    constexpr double tol = 1e-12;
    const double nr = norm3(r), ns = norm3(s);
    const Vec3 cr = cross(r, s);
    if (nr > tol && ns > tol && norm3(cr) > tol * nr * ns) {
        const Mat3 from = frame_columns(r, s);
        const Mat3 to = frame_columns(reflect_y(r), reflect_y(s));
        return mat_mul_t(to, from);  // to * from^T, both orthogonal
    }
    const Vec3 v = nr >= ns ? r : s;  // parallel or degenerate: one vector decides
    if (norm3(v) <= tol) return identity3();
    return single_vector_rotation(v, tol);
}

// Shepperd quaternion extraction; U = w I - i (x sx + y sy + z sz) conjugates
// Bloch vectors by R.
ComplexMatrix su2_from_rotation(const Mat3& R) {
    double w, x, y, z;
    const double tr = R[0][0] + R[1][1] + R[2][2];
    if (tr >= R[0][0] && tr >= R[1][1] && tr >= R[2][2]) {
        w = 0.5 * std::sqrt(1.0 + tr);
        x = (R[2][1] - R[1][2]) / (4.0 * w);
        y = (R[0][2] - R[2][0]) / (4.0 * w);
        z = (R[1][0] - R[0][1]) / (4.0 * w);
    } else {
        int i = 0;
        if (R[1][1] > R[i][i]) i = 1;
        if (R[2][2] > R[i][i]) i = 2;
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double s = std::sqrt(1.0 + R[i][i] - R[j][j] - R[k][k]);
        double q[4] = {0, 0, 0, 0};
        q[1 + i] = 0.5 * s;
        q[0] = (R[k][j] - R[j][k]) / (2.0 * s);
        q[1 + j] = (R[j][i] + R[i][j]) / (2.0 * s);
        q[1 + k] = (R[k][i] + R[i][k]) / (2.0 * s);
        w = q[0]; x = q[1]; y = q[2]; z = q[3];
    }
    const cxd mi(0.0, -1.0);
    return w * ComplexMatrix::identity(2) + mi * (x * pauli(1) + y * pauli(2) + z * pauli(3));
}

}  // namespace

ComplexMatrix transpose_unitary(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_qubit(rho, "transpose_unitary");
    check_qubit(sigma, "transpose_unitary");
    const BlochVector br = bloch(rho), bs = bloch(sigma);
    const Mat3 R = transpose_rotation({br.x, br.y, br.z}, {bs.x, bs.y, bs.z});
    return su2_from_rotation(R);
}

}  // namespace nmwit
