#include "torusweyl/operators.hpp"

#include <cmath>

namespace torusweyl {

namespace {

// n -> (n mod N, wrap count k) with n = (n mod N) + k N.
struct Wrapped {
    std::int64_t index;
    std::int64_t loops;
};

Wrapped wrap(std::int64_t n, int N) {
    std::int64_t m = n % N;
    if (m < 0) m += N;
    return {m, (n - m) / N};
}

}  // namespace

TorusOperator identity_operator(const TorusSpace& space) {
    return {space, Matrix::Identity(space.n, space.n)};
}

TorusOperator fourier_kernel(const TorusSpace& space) {
    const int N = space.n;
    Matrix f(N, N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) {
            PhaseAngle a{Rational(std::int64_t(m) * n, N), Rational(n, N), Rational(m, N),
                         Rational(1, N)};
            f(m, n) = scale * a.value(space);
        }
    }
    return {space, f};
}

TorusOperator translation(const TorusSpace& space, const ChordIndex& chord) {
    const int N = space.n;
    Matrix t = Matrix::Zero(N, N);
    for (int n = 0; n < N; ++n) {
        const auto [m, k] = wrap(n + chord.s, N);
        // exp(i 2pi [ r(2n+s)/(2N) + (r/N) chi_q - k chi_p ])
        PhaseAngle a{Rational(chord.r * (2 * n + chord.s), 2 * std::int64_t(N)),
                     Rational(-k), Rational(chord.r, N), Rational(0)};
        t(m, n) = a.value(space);
    }
    return {space, t};
}

TorusOperator reflection(const TorusSpace& space, const CenterIndex& center) {
    const int N = space.n;
    Matrix r = Matrix::Zero(N, N);
    for (int n = 0; n < N; ++n) {
        const auto [m, k] = wrap(center.b2 - n, N);
        // exp(i 2pi [ (b2-2n) a2/(2N) + ((b2-2n)/N - k) chi_p ])
        const std::int64_t d = center.b2 - 2 * n;
        PhaseAngle a{Rational(d * center.a2, 2 * std::int64_t(N)),
                     Rational(d, N) - Rational(k), Rational(0), Rational(0)};
        r(m, n) = a.value(space);
    }
    return {space, r};
}

TorusOperator translation_from_reflections(const TorusSpace& space, const ChordIndex& chord) {
    const int N = space.n;
    Matrix acc = Matrix::Zero(N, N);
    for (std::int64_t a2 = 0; a2 < 2 * N; ++a2) {
        for (std::int64_t b2 = 0; b2 < 2 * N; ++b2) {
            // exp(-i 2pi N x^xi) = exp(-i 2pi [ (a2 s - b2 r)/(2N) + s/N chi_p - r/N chi_q ])
            PhaseAngle a{Rational(-(a2 * chord.s - b2 * chord.r), 2 * std::int64_t(N)),
                         Rational(-chord.s, N), Rational(chord.r, N), Rational(0)};
            acc += a.value(space) * reflection(space, {a2, b2}).matrix();
        }
    }
    return {space, acc / (2.0 * N)};
}

TorusOperator schwinger_tq(const TorusSpace& space) { return translation(space, {0, 1}); }
TorusOperator schwinger_tp(const TorusSpace& space) { return translation(space, {1, 0}); }

Matrix nested_embedding(const TorusSpace& big, const TorusSpace& small, int nu) {
    if (nu < 2) throw std::invalid_argument("nested_embedding: nu must be > 1");
    if (big.n != nu * nu * small.n)
        throw std::invalid_argument("nested_embedding: big space must have nu^2 N states");
    // chi' = nu chi - k with integer k (the loop count of nu chi).
    const double kp = nu * small.chi_p - big.chi_p;
    const double kq = nu * small.chi_q - big.chi_q;
    if (std::abs(kp - std::round(kp)) > 1e-9 || std::abs(kq - std::round(kq)) > 1e-9)
        throw std::invalid_argument("nested_embedding: big chi inconsistent with nu*chi - k");
    const auto kq_int = static_cast<std::int64_t>(std::llround(kq));

    const int N = small.n;
    Matrix e = Matrix::Zero(big.n, N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(nu));
    for (int n = 0; n < N; ++n) {
        for (int rho = 0; rho < nu; ++rho) {
            std::int64_t idx = nu * n + kq_int + std::int64_t(rho) * nu * N;
            idx %= big.n;
            if (idx < 0) idx += big.n;
            e(idx, n) = scale * std::polar(1.0, 2.0 * kPi * small.chi_p * rho);
        }
    }
    return e;
}

TorusOperator nested_projector(const TorusSpace& big, const TorusSpace& small, int nu) {
    Matrix e = nested_embedding(big, small, nu);
    return {big, e * e.adjoint()};
}

}  // namespace torusweyl
