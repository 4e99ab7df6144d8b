#pragma once

#include <vector>

#include "torusweyl/symbols.hpp"

namespace torusweyl {

// Symbol product rules. Every rule equals the symbol of the matrix product of
// the reconstructed operators; factors are listed left to right, so
// product([A, B]) is the symbol of Op(A) * Op(B).
//
// Each term's phase is assembled exactly: all composition phases are 2N-th
// roots of unity, summation is row-major over lattice labels.

// AB(xi) = (1/N) sum_{xi1} A(xi1) B(xi - xi1) exp(i pi N xi1 ^ xi).
ChordSymbol chord_product(const ChordSymbol& a, const ChordSymbol& b);

// (n-1)-fold sum with the polygon phase D_{n+1}; n >= 1.
ChordSymbol chord_product_multi(const std::vector<ChordSymbol>& symbols);

// AB(x) = (1/N^2) sum_{x1,x2} A(x2) B(x1) exp(i 2pi N Delta_3(x,x1,x2)) f_N(x+x2-x1).
CenterSymbol center_product(const CenterSymbol& a, const CenterSymbol& b);

// 2n-fold sum with Delta_{2n+1} and the f_N corner factor. Odd counts are
// padded with the identity symbol f_N as the rightmost factor. Cost is
// Theta(N^(4n)) per output point; refuses when the estimated term count
// exceeds `budget`.
CenterSymbol center_product_multi(const std::vector<CenterSymbol>& symbols,
                                  std::size_t budget = 100000000);

// Odd-N rules on the QPS labels; no f_N factor.
QpsCenterSymbol center_product_qps(const QpsCenterSymbol& a, const QpsCenterSymbol& b);
QpsCenterSymbol center_product_multi_qps(const std::vector<QpsCenterSymbol>& symbols,
                                         std::size_t budget = 100000000);

// Trace-of-product formulas: Tr(AB) = (1/N) sum A(xi1) B(-xi1)
//                            Tr(AB) = (1/N) sum A(x1) B(x1).
cplx trace_of_product(const ChordSymbol& a, const ChordSymbol& b);
cplx trace_of_product(const CenterSymbol& a, const CenterSymbol& b);

}  // namespace torusweyl
