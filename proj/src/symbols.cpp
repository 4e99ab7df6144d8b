#include "torusweyl/symbols.hpp"

namespace torusweyl {

namespace {

struct Split {
    std::int64_t base;
    std::int64_t loops;
};

Split split_mod(std::int64_t v, int N) {
    std::int64_t b = v % N;
    if (b < 0) b += N;
    return {b, (v - b) / N};
}

// The generators have a single nonzero per column, so traces against them
// and expansions in them run in O(N) / O(N^2) per lattice point. Both
// helpers evaluate the same basis actions as translation() / reflection().

// Tr(op T_{r,s})
cplx trace_against_translation(const TorusOperator& op, std::int64_t r, std::int64_t s) {
    const TorusSpace& sp = op.space();
    const int N = sp.n;
    cplx acc = 0.0;
    for (int n = 0; n < N; ++n) {
        const auto [m, k] = split_mod(n + s, N);
        PhaseAngle a{Rational(r * (2 * n + s), 2 * std::int64_t(N)), Rational(-k),
                     Rational(r, N), Rational(0)};
        acc += op.matrix()(n, m) * a.value(sp);
    }
    return acc;
}

// Tr(op R_{a2,b2})
cplx trace_against_reflection(const TorusOperator& op, std::int64_t a2, std::int64_t b2) {
    const TorusSpace& sp = op.space();
    const int N = sp.n;
    cplx acc = 0.0;
    for (int n = 0; n < N; ++n) {
        const auto [m, k] = split_mod(b2 - n, N);
        const std::int64_t d = b2 - 2 * n;
        PhaseAngle a{Rational(d * a2, 2 * std::int64_t(N)), Rational(d, N) - Rational(k),
                     Rational(0), Rational(0)};
        acc += op.matrix()(n, m) * a.value(sp);
    }
    return acc;
}

}  // namespace

cplx ChordSymbol::at(std::int64_t r, std::int64_t s) const {
    const int N = space_.n;
    const auto [r0, kp] = split_mod(r, N);
    const auto [s0, kq] = split_mod(s, N);
    const int sign = parity_sign(s0 * kp + r0 * kq + kp * kq * N);
    // exp(-i 2pi (kp chi_q - kq chi_p))
    PhaseAngle a{Rational(0), Rational(kq), Rational(-kp), Rational(0)};
    return static_cast<double>(sign) * a.value(space_) * v_(r0, s0);
}

cplx CenterSymbol::at(std::int64_t a2, std::int64_t b2) const {
    const int N = space_.n;
    const auto [a0, kp] = split_mod(a2, N);
    const auto [b0, kq] = split_mod(b2, N);
    const int sign = parity_sign(b0 * kp + a0 * kq + kp * kq * N);
    return static_cast<double>(sign) * v_(a0, b0);
}

ChordSymbol chord_symbol(const TorusOperator& op) {
    const int N = op.space().n;
    ChordSymbol out(op.space());
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s)
            out.values()(r, s) = trace_against_translation(op, -r, -s);
    return out;
}

CenterSymbol center_symbol(const TorusOperator& op) {
    const int N = op.space().n;
    CenterSymbol out(op.space());
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2)
            out.values()(a2, b2) = trace_against_reflection(op, a2, b2);
    return out;
}

ChordSymbol chord_symbol_position_basis(const TorusOperator& op) {
    // A(xi_{r,s}) = sum_n <q_{n+s}|A|q_n> exp(-i 2pi/N r(n + s/2 + chi_q))
    const TorusSpace& sp = op.space();
    const int N = sp.n;
    const Matrix& m = op.matrix();
    ChordSymbol out(sp);
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s) {
            cplx acc = 0.0;
            for (int n = 0; n < N; ++n) {
                const auto [mm, k] = split_mod(n + s, N);
                // <q_{n+s}| = exp(+i 2pi k chi_p) <q_mm|
                PhaseAngle a{Rational(-std::int64_t(r) * (2 * n + s), 2 * std::int64_t(N)),
                             Rational(k), Rational(-r, N), Rational(0)};
                acc += m(mm, n) * a.value(sp);
            }
            out.values()(r, s) = acc;
        }
    }
    return out;
}

CenterSymbol center_symbol_position_basis(const TorusOperator& op) {
    // A(x_{a,b}) = sum_n <q_n|A|q_{2b-n}> exp(i 2pi/N (b2-2n)(a + chi_p)) (wrap phased)
    const TorusSpace& sp = op.space();
    const int N = sp.n;
    const Matrix& m = op.matrix();
    CenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            cplx acc = 0.0;
            for (int n = 0; n < N; ++n) {
                const auto [mm, k] = split_mod(std::int64_t(b2) - n, N);
                const std::int64_t d = std::int64_t(b2) - 2 * n;
                PhaseAngle a{Rational(d * a2, 2 * std::int64_t(N)),
                             Rational(d, N) - Rational(k), Rational(0), Rational(0)};
                acc += m(n, mm) * a.value(sp);
            }
            out.values()(a2, b2) = acc;
        }
    }
    return out;
}

TorusOperator operator_from_chord(const ChordSymbol& sym) {
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    Matrix acc = Matrix::Zero(N, N);
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
            const cplx v = sym.fundamental(r, s);
            for (int n = 0; n < N; ++n) {
                const auto [m, k] = split_mod(n + s, N);
                PhaseAngle a{Rational(std::int64_t(r) * (2 * n + s), 2 * std::int64_t(N)),
                             Rational(-k), Rational(r, N), Rational(0)};
                acc(m, n) += v * a.value(sp);
            }
        }
    return {sp, acc / static_cast<double>(N)};
}

TorusOperator operator_from_center(const CenterSymbol& sym) {
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    Matrix acc = Matrix::Zero(N, N);
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2) {
            const cplx v = sym.fundamental(a2, b2);
            for (int n = 0; n < N; ++n) {
                const auto [m, k] = split_mod(std::int64_t(b2) - n, N);
                const std::int64_t d = std::int64_t(b2) - 2 * n;
                PhaseAngle a{Rational(d * a2, 2 * std::int64_t(N)),
                             Rational(d, N) - Rational(k), Rational(0), Rational(0)};
                acc(m, n) += v * a.value(sp);
            }
        }
    return {sp, acc / static_cast<double>(N)};
}

TorusOperator operator_from_center_qps(const QpsCenterSymbol& sym) {
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    Matrix acc = Matrix::Zero(N, N);
    for (int al = 0; al < N; ++al)
        for (int be = 0; be < N; ++be)
            acc += sym.fundamental(al, be) * reflection_qps(sp, al, be).matrix();
    return {sp, acc / static_cast<double>(N)};
}

Matrix position_matrix_from_chord(const ChordSymbol& sym) {
    // <q_m|A|q_n> = (1/N) sum_r A(r, m-n) exp(+i 2pi/N r((m+n)/2 + chi_q))
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    Matrix out(N, N);
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) {
            cplx acc = 0.0;
            for (int r = 0; r < N; ++r) {
                PhaseAngle a{Rational(std::int64_t(r) * (m + n), 2 * std::int64_t(N)),
                             Rational(0), Rational(r, N), Rational(0)};
                acc += sym.at(r, m - n) * a.value(sp);
            }
            out(m, n) = acc / static_cast<double>(N);
        }
    }
    return out;
}

Matrix position_matrix_from_center(const CenterSymbol& sym) {
    // <q_m|A|q_n> = (1/N) sum_a2 A(a2, m+n) exp(i 2pi/N (m-n)(a2/2 + chi_p))
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    Matrix out(N, N);
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) {
            cplx acc = 0.0;
            for (int a2 = 0; a2 < N; ++a2) {
                PhaseAngle a{Rational(std::int64_t(m - n) * a2, 2 * std::int64_t(N)),
                             Rational(m - n, N), Rational(0), Rational(0)};
                acc += sym.at(a2, std::int64_t(m) + n) * a.value(sp);
            }
            out(m, n) = acc / static_cast<double>(N);
        }
    }
    return out;
}

CenterSymbol chord_to_center(const ChordSymbol& sym) {
    // A(x) = (1/N) sum_xi A(xi) f_N(x + xi/2) exp(-i 2pi N x^xi)
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    CenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            cplx acc = 0.0;
            for (int r = 0; r < N; ++r) {
                for (int s = 0; s < N; ++s) {
                    const int f = reflection_trace(sp, {a2 + r, b2 + s});
                    if (f == 0) continue;
                    PhaseAngle a{Rational(-(std::int64_t(a2) * s - std::int64_t(b2) * r),
                                          2 * std::int64_t(N)),
                                 Rational(-s, N), Rational(r, N), Rational(0)};
                    acc += static_cast<double>(f) * sym.fundamental(r, s) * a.value(sp);
                }
            }
            out.values()(a2, b2) = acc / static_cast<double>(N);
        }
    }
    return out;
}

ChordSymbol center_to_chord(const CenterSymbol& sym) {
    // A(xi) = (1/N) sum_x A(x) f_N(x + xi/2) exp(+i 2pi N x^xi)
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    ChordSymbol out(sp);
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s) {
            cplx acc = 0.0;
            for (int a2 = 0; a2 < N; ++a2) {
                for (int b2 = 0; b2 < N; ++b2) {
                    const int f = reflection_trace(sp, {a2 + r, b2 + s});
                    if (f == 0) continue;
                    PhaseAngle a{Rational(std::int64_t(a2) * s - std::int64_t(b2) * r,
                                          2 * std::int64_t(N)),
                                 Rational(s, N), Rational(-r, N), Rational(0)};
                    acc += static_cast<double>(f) * sym.fundamental(a2, b2) * a.value(sp);
                }
            }
            out.values()(r, s) = acc / static_cast<double>(N);
        }
    }
    return out;
}

int recenter_sign(const TorusSpace& space, const CenterIndex& c) {
    const int j = static_cast<int>(((c.a2 % 2) + 2) % 2);
    const int k = static_cast<int>(((c.b2 % 2) + 2) % 2);
    return parity_sign(c.b2 * j + c.a2 * k + std::int64_t(j) * k * space.n);
}

QpsCenterSymbol recenter_odd_n(const CenterSymbol& sym) {
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    if (N % 2 == 0)
        throw std::invalid_argument("recenter_odd_n: QPS representation requires odd N");
    QpsCenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            const int j = a2 % 2, k = b2 % 2;
            const int al = (a2 + j * N) / 2, be = (b2 + k * N) / 2;
            out.values()(al, be) =
                static_cast<double>(recenter_sign(sp, {a2, b2})) * sym.fundamental(a2, b2);
        }
    }
    return out;
}

CenterSymbol recenter_to_half_labels(const QpsCenterSymbol& sym) {
    const TorusSpace& sp = sym.space();
    const int N = sp.n;
    CenterSymbol out(sp);
    for (int a2 = 0; a2 < N; ++a2) {
        for (int b2 = 0; b2 < N; ++b2) {
            const int j = a2 % 2, k = b2 % 2;
            const int al = (a2 + j * N) / 2, be = (b2 + k * N) / 2;
            out.values()(a2, b2) =
                static_cast<double>(recenter_sign(sp, {a2, b2})) * sym.fundamental(al, be);
        }
    }
    return out;
}

TorusOperator reflection_qps(const TorusSpace& space, std::int64_t alpha, std::int64_t beta) {
    const int N = space.n;
    if (N % 2 == 0) throw std::invalid_argument("reflection_qps: requires odd N");
    std::int64_t al = alpha % N, be = beta % N;
    if (al < 0) al += N;
    if (be < 0) be += N;
    // X = x + (j,k)/2 with half labels a2 = 2 alpha - jN in [0, N-1].
    const std::int64_t a2 = (2 * al < N) ? 2 * al : 2 * al - N;
    const std::int64_t b2 = (2 * be < N) ? 2 * be : 2 * be - N;
    const double sign = recenter_sign(space, {a2, b2});
    return sign * reflection(space, {a2, b2});
}

ChordSymbol identity_chord_symbol(const TorusSpace& space) {
    ChordSymbol out(space);
    out.values()(0, 0) = static_cast<double>(space.n);
    return out;
}

CenterSymbol identity_center_symbol(const TorusSpace& space) {
    CenterSymbol out(space);
    for (int a2 = 0; a2 < space.n; ++a2)
        for (int b2 = 0; b2 < space.n; ++b2)
            out.values()(a2, b2) = reflection_trace(space, {a2, b2});
    return out;
}

QpsCenterSymbol identity_qps_symbol(const TorusSpace& space) {
    QpsCenterSymbol out(space);
    out.values().setOnes();
    return out;
}

CenterSymbol wigner(const TorusState& state) {
    const double nn = state.norm();
    if (nn < 1e-14) throw std::invalid_argument("wigner: zero state vector");
    const Vector& a = state.amplitudes();
    Matrix rho = (a * a.adjoint()) / (nn * nn);
    CenterSymbol w = center_symbol({state.space(), rho});
    w.values() /= static_cast<double>(state.space().n);
    return w;
}

cplx trace_from_center(const CenterSymbol& sym) {
    const int N = sym.space().n;
    cplx acc = 0.0;
    for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2)
            acc += sym.fundamental(a2, b2) *
                   static_cast<double>(reflection_trace(sym.space(), {a2, b2}));
    return acc / static_cast<double>(N);
}

}  // namespace torusweyl
