#pragma once

#include "torusweyl/products.hpp"

namespace torusweyl {

// Integer Cayley data of a cat map: M = (1 - JB)(1 + JB)^{-1} with B integer
// symmetric and det M = 1. Both matrices are kept; construction from either
// side validates the relation exactly in integer arithmetic.
struct CatMapSpec {
    using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

    Mat2 b;
    Mat2 m;

    static CatMapSpec from_cayley(const Mat2& b);
    static CatMapSpec from_map(const Mat2& m);

    // Image of a QPS label point under M, reduced mod N.
    std::pair<std::int64_t, std::int64_t> apply(std::int64_t alpha, std::int64_t beta,
                                                int n) const {
        std::int64_t ap = (m[0][0] * alpha + m[0][1] * beta) % n;
        std::int64_t bp = (m[1][0] * alpha + m[1][1] * beta) % n;
        if (ap < 0) ap += n;
        if (bp < 0) bp += n;
        return {ap, bp};
    }
};

// exp(+i t H / hbar) = exp(+i 2pi N t H) by eigendecomposition; `flip_sign`
// selects the exp(-i t H / hbar) convention instead.
TorusOperator propagator_exact(const TorusOperator& h, double t, bool flip_sign = false);

// (exp(+i (t/M) H / hbar))^M; equal to the exact propagator for any M.
TorusOperator propagator_trotter(const TorusOperator& h, double t, int steps,
                                 bool flip_sign = false);

// Discrete path sum for the center symbol of the propagator at finite slice
// count M: 2M intermediate centers, phase Delta_{2M+1} - (t/2M) sum H(x_i),
// f_N corner factor in the general representation. Converges to the exact
// symbol as M grows.
CenterSymbol path_integral_center(const CenterSymbol& h_symbol, double t, int steps,
                                  std::size_t budget = 100000000);

// Odd-N variant on QPS labels (no f_N factor).
QpsCenterSymbol path_integral_center_qps(const QpsCenterSymbol& h_symbol, double t, int steps,
                                         std::size_t budget = 100000000);

// Short-time slice symbols used by the path sums. On QPS labels the slice is
// exp(i 2pi N tau H(X)); in the general representation the identity symbol is
// f_N rather than 1, so the slice is the Euler step f_N(x) + i 2pi N tau H(x).
CenterSymbol short_time_symbol(const CenterSymbol& h_symbol, double tau);
QpsCenterSymbol short_time_symbol(const QpsCenterSymbol& h_symbol, double tau);

// Quantized cat map on the QPS (N odd, chi = 0), built from the quadratic
// center symbol exp(-i 2pi N X B X), rescaled to exact unitarity with
// det U = 1. Conjugation by the result transports center symbols as
// A(X) -> A(M X).
TorusOperator cat_map_unitary(const TorusSpace& space, const CatMapSpec& spec);

// U_M A U_M^{-1}.
TorusOperator feline_conjugate(const TorusOperator& a, const CatMapSpec& spec);

}  // namespace torusweyl
