#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "torusweyl/rational.hpp"

namespace torusweyl {

inline constexpr double kPi = 3.14159265358979323846;

// N-state Hilbert space of the unit torus with Floquet angles chi = (chi_p, chi_q).
// hbar is implied by 2*pi*hbar*N = 1.
struct TorusSpace {
    int n = 1;
    double chi_p = 0.0;
    double chi_q = 0.0;

    TorusSpace(int n_states, double cp = 0.0, double cq = 0.0)
        : n(n_states), chi_p(cp), chi_q(cq) {
        if (n < 1) throw std::invalid_argument("TorusSpace: n must be >= 1");
        if (cp < 0.0 || cp >= 1.0 || cq < 0.0 || cq >= 1.0)
            throw std::invalid_argument("TorusSpace: chi components must lie in [0,1)");
    }

    bool operator==(const TorusSpace& o) const {
        return n == o.n && chi_p == o.chi_p && chi_q == o.chi_q;
    }
};

// Chord xi = (r/N, s/N); r = momentum steps, s = position steps.
// Fundamental domain r,s in [0,N-1]; arbitrary integers are allowed and wrap
// through the operator periodicity phases.
struct ChordIndex {
    std::int64_t r = 0;
    std::int64_t s = 0;
};

// Center x = ((a+chi_p)/N, (b+chi_q)/N) with half-integer a = a2/2, b = b2/2.
// Independent domain a2,b2 in [0,N-1].
struct CenterIndex {
    std::int64_t a2 = 0;
    std::int64_t b2 = 0;
};

using Vec2 = std::array<double, 2>;  // (p, q)

// xi ^ eta = xi_p eta_q - xi_q eta_p.
inline double symplectic_product(const Vec2& u, const Vec2& v) {
    return u[0] * v[1] - u[1] * v[0];
}

inline std::int64_t wedge(std::int64_t up, std::int64_t uq,
                          std::int64_t vp, std::int64_t vq) {
    return up * vq - uq * vp;
}

// 1 iff (x - y) is an integer multiple of the period, within 1e-9.
inline int n_periodic_delta(double x, double y, double period) {
    if (period <= 0.0) throw std::invalid_argument("n_periodic_delta: period must be > 0");
    const double q = (x - y) / period;
    return std::abs(q - std::round(q)) < 1e-9 ? 1 : 0;
}

inline int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// f_N(x) = Tr R_x = (1 + (-1)^2a + (-1)^2b + (-1)^(2a+2b+N)) / 2, in {-1,0,1,2}.
inline int reflection_trace(const TorusSpace& space, const CenterIndex& c) {
    return (1 + parity_sign(c.a2) + parity_sign(c.b2) + parity_sign(c.a2 + c.b2 + space.n)) / 2;
}

// ---------------------------------------------------------------------------
// Polygon areas entering the composition phases.
//
// Convention (fixed against direct matrix products of the generators):
//   T_{xi_1} T_{xi_2} ... T_{xi_j} = T_{xi_1+...+xi_j} exp(i 2pi N D_{j+1})
// with D_{j+1}(xi_1,...,xi_j) = 1/2 sum_{i<k} xi_i ^ xi_k, the symplectic area
// of the (j+1)-gon closed by -sum xi_i. In particular D_3(xi_1,xi_2) =
// +1/2 xi_1 ^ xi_2 for the product taken in the order written.
// ---------------------------------------------------------------------------

inline double chord_polygon_phase(std::span<const Vec2> chords) {
    if (chords.empty()) throw std::invalid_argument("chord_polygon_phase: empty chord list");
    double d = 0.0;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t k = i + 1; k < chords.size(); ++k)
            d += 0.5 * symplectic_product(chords[i], chords[k]);
    return d;
}

// Exact N * D_{j+1} for lattice chords; the operator phase is exp(i 2pi turns).
inline Rational chord_polygon_turns(const TorusSpace& space, std::span<const ChordIndex> chords) {
    if (chords.empty()) throw std::invalid_argument("chord_polygon_turns: empty chord list");
    std::int64_t acc = 0;  // sum of integer wedges r_i s_k - s_i r_k
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t k = i + 1; k < chords.size(); ++k)
            acc += wedge(chords[i].r, chords[i].s, chords[k].r, chords[k].s);
    return Rational(acc, 2 * static_cast<std::int64_t>(space.n));
}

// Delta_{2n+1}(x, x_1, ..., x_2n): symplectic area of the (2n+1)-gon
// circumscribed around the listed centers. For n=1 this is the printed
// triangle area Delta_3(x,x1,x2) = 2(x1^x2 + x2^x + x^x1). The general form
// is assembled from the reflection cocycle: pair the reversed list into
// translations 2(y_{2k-1} - y_{2k}) and accumulate their composition areas.
inline double center_polygon_phase(const Vec2& x, std::span<const Vec2> centers) {
    if (centers.size() % 2 != 0)
        throw std::invalid_argument("center_polygon_phase: need an even number of centers");
    const std::size_t n2 = centers.size();
    std::vector<Vec2> y(n2);
    for (std::size_t j = 0; j < n2; ++j) y[j] = centers[n2 - 1 - j];

    double e = 0.0;
    Vec2 v{0.0, 0.0};
    std::vector<Vec2> tau;
    for (std::size_t k = 0; 2 * k < n2; ++k) {
        const Vec2& y1 = y[2 * k];
        const Vec2& y2 = y[2 * k + 1];
        e += -2.0 * symplectic_product(y1, y2);
        tau.push_back({y1[0] - y2[0], y1[1] - y2[1]});
        v[0] += y1[0] - y2[0];
        v[1] += y1[1] - y2[1];
    }
    for (std::size_t k = 0; k < tau.size(); ++k)
        for (std::size_t l = k + 1; l < tau.size(); ++l)
            e += 2.0 * symplectic_product(tau[k], tau[l]);
    e += -2.0 * symplectic_product(x, v);
    return e;
}

// Exact N * Delta_{2n+1} on lattice labels. `den` scales labels to phase
// space: centers carry doubled labels (den = 2, x = label/(2N)); the odd-N
// QPS lattice uses plain integers (den = 1, X = label/N). chi drops out by
// translation invariance.
struct LabelVec {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

inline Rational center_polygon_turns(const TorusSpace& space, const LabelVec& x,
                                     std::span<const LabelVec> centers, int den) {
    if (centers.size() % 2 != 0)
        throw std::invalid_argument("center_polygon_turns: need an even number of centers");
    const std::size_t n2 = centers.size();
    std::int64_t e = 0;  // sum of integer wedges; Delta = 2*e'/(den^2 N^2) assembled below
    LabelVec v{0, 0};
    std::vector<LabelVec> tau;
    tau.reserve(n2 / 2);
    for (std::size_t k = 0; 2 * k < n2; ++k) {
        const LabelVec& y1 = centers[n2 - 1 - 2 * k];
        const LabelVec& y2 = centers[n2 - 2 - 2 * k];
        e += -wedge(y1.p, y1.q, y2.p, y2.q);
        tau.push_back({y1.p - y2.p, y1.q - y2.q});
        v.p += y1.p - y2.p;
        v.q += y1.q - y2.q;
    }
    for (std::size_t k = 0; k < tau.size(); ++k)
        for (std::size_t l = k + 1; l < tau.size(); ++l)
            e += wedge(tau[k].p, tau[k].q, tau[l].p, tau[l].q);
    e += -wedge(x.p, x.q, v.p, v.q);
    // turns = N * Delta = 2 e / (den^2 N)
    return Rational(2 * e, static_cast<std::int64_t>(den) * den * space.n);
}

// Phase exp(i 2pi (turns + cp*chi_p + cq*chi_q + cpq*chi_p*chi_q)); the chi
// coefficients stay exact so rational chi give machine-rounding phases.
struct PhaseAngle {
    Rational turns, cp, cq, cpq;

    std::complex<double> value(const TorusSpace& space) const {
        double t = turns.mod_one().value() + cp.value() * space.chi_p +
                   cq.value() * space.chi_q + cpq.value() * space.chi_p * space.chi_q;
        return std::polar(1.0, 2.0 * kPi * t);
    }
};

}  // namespace torusweyl
