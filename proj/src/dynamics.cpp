#include "torusweyl/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace torusweyl {

namespace {

using Mat2 = CatMapSpec::Mat2;

std::int64_t det2(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Mat2 mul2(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

constexpr Mat2 kJ{{{0, -1}, {1, 0}}};
constexpr Mat2 kId{{{1, 0}, {0, 1}}};

Mat2 add2(const Mat2& a, const Mat2& b, std::int64_t sb) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + sb * b[i][j];
    return c;
}

Mat2 adj2(const Mat2& a) { return Mat2{{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}}; }

// a * adj(b) / det(b), required to be integer.
Mat2 divide_exact(const Mat2& num, const Mat2& den, const char* what) {
    const std::int64_t d = det2(den);
    if (d == 0) throw std::invalid_argument(std::string(what) + ": Cayley relation singular");
    Mat2 p = mul2(num, adj2(den));
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (p[i][j] % d != 0)
                throw std::invalid_argument(std::string(what) + ": non-integer Cayley matrix");
            out[i][j] = p[i][j] / d;
        }
    return out;
}

std::size_t checked_terms(int N, int count, std::size_t budget, const char* what) {
    const double terms =
        std::pow(static_cast<double>(N) * N, static_cast<double>(count) + 1.0);
    if (terms > static_cast<double>(budget))
        throw std::domain_error(std::string(what) + ": term budget exceeded");
    return static_cast<std::size_t>(terms);
}

}  // namespace

CatMapSpec CatMapSpec::from_cayley(const Mat2& b) {
    if (b[0][1] != b[1][0])
        throw std::invalid_argument("CatMapSpec: Cayley matrix must be symmetric");
    const Mat2 jb = mul2(kJ, b);
    const Mat2 m = divide_exact(add2(kId, jb, -1), add2(kId, jb, +1), "CatMapSpec");
    if (det2(m) != 1) throw std::invalid_argument("CatMapSpec: det M must be 1");
    return {b, m};
}

CatMapSpec CatMapSpec::from_map(const Mat2& m) {
    if (det2(m) != 1) throw std::invalid_argument("CatMapSpec: det M must be 1");
    // B = -J (1+M)^{-1} (1-M)
    const Mat2 ratio = divide_exact(add2(kId, m, -1), add2(kId, m, +1), "CatMapSpec");
    const Mat2 b = mul2(Mat2{{{0, 1}, {-1, 0}}}, ratio);  // -J * ratio
    if (b[0][1] != b[1][0])
        throw std::invalid_argument("CatMapSpec: recovered Cayley matrix not symmetric");
    return from_cayley(b);
}

TorusOperator propagator_exact(const TorusOperator& h, double t, bool flip_sign) {
    if (!h.is_hermitian())
        throw std::invalid_argument("propagator_exact: Hamiltonian must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("propagator_exact: eigendecomposition failed");
    const double sign = flip_sign ? -1.0 : 1.0;
    const double omega = sign * 2.0 * kPi * h.space().n * t;
    Vector phases(h.space().n);
    for (int i = 0; i < h.space().n; ++i)
        phases(i) = std::polar(1.0, omega * es.eigenvalues()(i));
    Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return {h.space(), u};
}

TorusOperator propagator_trotter(const TorusOperator& h, double t, int steps, bool flip_sign) {
    if (steps < 1) throw std::invalid_argument("propagator_trotter: steps must be >= 1");
    const TorusOperator step = propagator_exact(h, t / steps, flip_sign);
    Matrix acc = Matrix::Identity(h.space().n, h.space().n);
    for (int i = 0; i < steps; ++i) acc = step.matrix() * acc;
    return {h.space(), acc};
}

CenterSymbol short_time_symbol(const CenterSymbol& h_symbol, double tau) {
    // Identity-anchored Euler slice f_N(x) + i 2pi N tau H(x). The identity
    // symbol in this representation is f_N, not 1, so a plain exponential
    // slice cannot reach the exact symbol at centers with f_N != 1; the
    // linear slice differs from the true short-time symbol by O(tau^2).
    const int N = h_symbol.space().n;
    CenterSymbol u(h_symbol.space());
    const cplx iw(0.0, 2.0 * kPi * N * tau);
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2)
            u.values()(a2, b2) =
                static_cast<double>(reflection_trace(h_symbol.space(), {a2, b2})) +
                iw * h_symbol.fundamental(a2, b2);
    return u;
}

QpsCenterSymbol short_time_symbol(const QpsCenterSymbol& h_symbol, double tau) {
    const int N = h_symbol.space().n;
    QpsCenterSymbol u(h_symbol.space());
    const cplx iw(0.0, 2.0 * kPi * N * tau);
    for (int al = 0; al < N; ++al)
        for (int be = 0; be < N; ++be)
            u.values()(al, be) = std::exp(iw * h_symbol.fundamental(al, be));
    return u;
}

namespace {

// Direct evaluation of the 2M-fold path sum. `den` = 2 for half-integer
// labels (general representation, with f_N corners), 1 for QPS labels.
Matrix path_sum(const TorusSpace& sp, const Matrix& slice, int steps, int den,
                bool with_corner) {
    const int N = sp.n;
    const int n2 = 2 * steps;
    const double scale = std::pow(static_cast<double>(N), static_cast<double>(n2));

    Matrix out(N, N);
    std::vector<LabelVec> xs(n2);
    for (int p = 0; p < N; ++p) {
        for (int q = 0; q < N; ++q) {
            const LabelVec x{p, q};
            cplx acc = 0.0;
            std::fill(xs.begin(), xs.end(), LabelVec{0, 0});
            bool more = true;
            while (more) {
                LabelVec v{0, 0};
                for (int j = 0; j < n2; ++j) {
                    const std::int64_t sgn = (j % 2 == 0) ? -1 : +1;  // sum (-1)^j x_j, x_1 first
                    v.p += sgn * xs[j].p;
                    v.q += sgn * xs[j].q;
                }
                int f = 1;
                if (with_corner) f = reflection_trace(sp, {p + v.p, q + v.q});
                if (f != 0) {
                    cplx term = 1.0;
                    for (int j = 0; j < n2; ++j)
                        term *= slice(xs[j].p, xs[j].q);
                    const Rational turns =
                        center_polygon_turns(sp, x, std::span<const LabelVec>(xs), den);
                    term *= Phase{turns}.value() * static_cast<double>(f);
                    acc += term;
                }
                // row-major odometer
                more = false;
                for (std::size_t j = xs.size(); j-- > 0;) {
                    if (++xs[j].q < N) { more = true; break; }
                    xs[j].q = 0;
                    if (++xs[j].p < N) { more = true; break; }
                    xs[j].p = 0;
                }
            }
            out(p, q) = acc / scale;
        }
    }
    return out;
}

}  // namespace

CenterSymbol path_integral_center(const CenterSymbol& h_symbol, double t, int steps,
                                  std::size_t budget) {
    if (steps < 1) throw std::invalid_argument("path_integral_center: steps must be >= 1");
    const TorusSpace& sp = h_symbol.space();
    checked_terms(sp.n, 2 * steps, budget, "path_integral_center");
    const CenterSymbol u = short_time_symbol(h_symbol, t / (2.0 * steps));
    return {sp, path_sum(sp, u.values(), steps, 2, true)};
}

QpsCenterSymbol path_integral_center_qps(const QpsCenterSymbol& h_symbol, double t, int steps,
                                         std::size_t budget) {
    if (steps < 1) throw std::invalid_argument("path_integral_center_qps: steps must be >= 1");
    const TorusSpace& sp = h_symbol.space();
    checked_terms(sp.n, 2 * steps, budget, "path_integral_center_qps");
    const QpsCenterSymbol u = short_time_symbol(h_symbol, t / (2.0 * steps));
    return {sp, path_sum(sp, u.values(), steps, 1, false)};
}

TorusOperator cat_map_unitary(const TorusSpace& space, const CatMapSpec& spec) {
    const int N = space.n;
    if (N % 2 == 0) throw std::invalid_argument("cat_map_unitary: requires odd N");
    if (space.chi_p != 0.0 || space.chi_q != 0.0)
        throw std::invalid_argument("cat_map_unitary: requires chi = 0");

    // QPS symbol exp(-i 2pi N X B X) / sqrt(N); the sign makes conjugation
    // transport symbols forward along M rather than M^{-1}.
    QpsCenterSymbol sym(space);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::int64_t al = 0; al < N; ++al) {
        for (std::int64_t be = 0; be < N; ++be) {
            const std::int64_t q = spec.b[0][0] * al * al + 2 * spec.b[0][1] * al * be +
                                   spec.b[1][1] * be * be;
            sym.values()(al, be) = scale * Phase{Rational(-q, N)}.value();
        }
    }
    TorusOperator u0 = operator_from_center(recenter_to_half_labels(sym));

    // The printed prefactor leaves U0 U0^dag = lambda 1; rescale to unitary
    // and fix the residual global phase by det U = 1.
    const double lambda = (u0.matrix() * u0.matrix().adjoint()).trace().real() / N;
    if (lambda <= 0.0) throw std::runtime_error("cat_map_unitary: degenerate symbol sum");
    Matrix u = u0.matrix() / std::sqrt(lambda);
    const cplx det = Matrix(u).determinant();
    u *= std::polar(1.0, -std::arg(det) / N);
    return {space, u};
}

TorusOperator feline_conjugate(const TorusOperator& a, const CatMapSpec& spec) {
    const TorusOperator u = cat_map_unitary(a.space(), spec);
    return u * a * u.adjoint();
}

}  // namespace torusweyl
