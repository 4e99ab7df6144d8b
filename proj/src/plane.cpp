#include "torusweyl/plane.hpp"

namespace torusweyl {

TorusOperator quantize_hamiltonian(const TorusSpace& space, const PeriodicPlaneSymbol& h) {
    Matrix acc = Matrix::Zero(space.n, space.n);
    for (const auto& [k, v] : h.terms())
        acc += v * translation(space, {k.first, k.second}).matrix();
    return {space, acc};
}

cplx project_plane_chord_symbol(const TorusSpace& space, const PeriodicPlaneSymbol& h,
                                const ChordIndex& chord) {
    const int N = space.n;
    cplx acc = 0.0;
    for (const auto& [key, v] : h.terms()) {
        const std::int64_t dr = key.first - chord.r;
        const std::int64_t ds = key.second - chord.s;
        if (dr % N != 0 || ds % N != 0) continue;
        const std::int64_t kp = dr / N, kq = ds / N;
        const int sign = parity_sign(chord.s * kp + chord.r * kq + kp * kq * N);
        // exp(+i 2pi (kp chi_q - kq chi_p))
        PhaseAngle a{Rational(0), Rational(-kq), Rational(kp), Rational(0)};
        acc += static_cast<double>(sign) * a.value(space) * v;
    }
    return acc;
}

cplx project_plane_center_symbol(const TorusSpace& space, const PeriodicPlaneSymbol& h,
                                 const CenterIndex& center) {
    const int N = space.n;
    cplx acc = 0.0;
    for (int kp = 0; kp < 2; ++kp) {
        for (int kq = 0; kq < 2; ++kq) {
            // weight exp(i 2pi (a kq - b kp + N kp kq / 2)); no chi dependence
            PhaseAngle w{Rational(center.a2 * kq - center.b2 * kp + std::int64_t(N) * kp * kq,
                                  2),
                         Rational(0), Rational(0), Rational(0)};
            // plane symbol of the coefficient comb at y = x + k/2:
            // sum_(r,s) H_{r,s} exp(i 2pi (r y_q - s y_p))
            cplx plane = 0.0;
            for (const auto& [key, v] : h.terms()) {
                const auto [r, s] = key;
                PhaseAngle a{Rational(r * (center.b2 + std::int64_t(kq) * N) -
                                          s * (center.a2 + std::int64_t(kp) * N),
                                      2 * std::int64_t(N)),
                             Rational(-s, N), Rational(r, N), Rational(0)};
                plane += v * a.value(space);
            }
            acc += w.value(space) * plane;
        }
    }
    return 0.5 * acc;
}

}  // namespace torusweyl
