#pragma once

#include "torusweyl/operators.hpp"

namespace torusweyl {

// Chord symbol A(xi) = Tr(A T_{-xi}) stored on the fundamental block
// r,s in [0,N-1]. Values at arbitrary integer chords follow from
//   A(xi + k) = (-1)^(s kp + r kq + kp kq N) exp(-i 2pi (kp chi_q - kq chi_p)) A(xi),
// the phase the pairing with T_{-xi} inherits from the operator periodicity.
class ChordSymbol {
public:
    ChordSymbol(TorusSpace space, Matrix values) : space_(space), v_(std::move(values)) {
        if (v_.rows() != space_.n || v_.cols() != space_.n)
            throw std::invalid_argument("ChordSymbol: value block must be N x N");
    }
    explicit ChordSymbol(TorusSpace space)
        : space_(space), v_(Matrix::Zero(space.n, space.n)) {}

    const TorusSpace& space() const { return space_; }
    const Matrix& values() const { return v_; }
    Matrix& values() { return v_; }

    cplx fundamental(int r, int s) const { return v_(r, s); }

    // Extension to any integer chord.
    cplx at(std::int64_t r, std::int64_t s) const;

private:
    TorusSpace space_;
    Matrix v_;  // v_(r, s)
};

// Center (Weyl) symbol A(x) = Tr(A R_x) on the quarter-torus block
// a2,b2 in [0,N-1] (doubled half-integer labels). Extension:
//   A(x + k/2) = (-1)^(b2 kp + a2 kq + kp kq N) A(x).
class CenterSymbol {
public:
    CenterSymbol(TorusSpace space, Matrix values) : space_(space), v_(std::move(values)) {
        if (v_.rows() != space_.n || v_.cols() != space_.n)
            throw std::invalid_argument("CenterSymbol: value block must be N x N");
    }
    explicit CenterSymbol(TorusSpace space)
        : space_(space), v_(Matrix::Zero(space.n, space.n)) {}

    const TorusSpace& space() const { return space_; }
    const Matrix& values() const { return v_; }
    Matrix& values() { return v_; }

    cplx fundamental(int a2, int b2) const { return v_(a2, b2); }
    cplx at(std::int64_t a2, std::int64_t b2) const;

private:
    TorusSpace space_;
    Matrix v_;  // v_(a2, b2)
};

// Center symbol re-centred onto the integer QPS lattice (N odd): values at
// X = ((alpha+chi_p)/N, (beta+chi_q)/N), alpha,beta in [0,N-1]. Strictly
// periodic: integer label shifts carry no sign.
class QpsCenterSymbol {
public:
    QpsCenterSymbol(TorusSpace space, Matrix values) : space_(space), v_(std::move(values)) {
        if (space_.n % 2 == 0)
            throw std::invalid_argument("QpsCenterSymbol: N must be odd");
        if (v_.rows() != space_.n || v_.cols() != space_.n)
            throw std::invalid_argument("QpsCenterSymbol: value block must be N x N");
    }
    explicit QpsCenterSymbol(TorusSpace space)
        : QpsCenterSymbol(space, Matrix::Zero(space.n, space.n)) {}

    const TorusSpace& space() const { return space_; }
    const Matrix& values() const { return v_; }
    Matrix& values() { return v_; }

    cplx fundamental(int alpha, int beta) const { return v_(alpha, beta); }
    cplx at(std::int64_t alpha, std::int64_t beta) const {
        const int N = space_.n;
        std::int64_t a = alpha % N, b = beta % N;
        if (a < 0) a += N;
        if (b < 0) b += N;
        return v_(a, b);
    }

private:
    TorusSpace space_;
    Matrix v_;  // v_(alpha, beta)
};

// --- transforms -------------------------------------------------------------

ChordSymbol chord_symbol(const TorusOperator& op);
CenterSymbol center_symbol(const TorusOperator& op);

// Position-basis routes (independent of the trace route above).
ChordSymbol chord_symbol_position_basis(const TorusOperator& op);
CenterSymbol center_symbol_position_basis(const TorusOperator& op);

// A = (1/N) sum_xi A(xi) T_xi   /   A = (1/N) sum_x R_x A(x).
TorusOperator operator_from_chord(const ChordSymbol& sym);
TorusOperator operator_from_center(const CenterSymbol& sym);
TorusOperator operator_from_center_qps(const QpsCenterSymbol& sym);

// Matrix assembly straight from symbol values (finite Fourier sums), an
// independent route to the operator matrix.
Matrix position_matrix_from_chord(const ChordSymbol& sym);
Matrix position_matrix_from_center(const CenterSymbol& sym);

// Symbol <-> symbol transforms through f_N-weighted finite Fourier sums.
CenterSymbol chord_to_center(const ChordSymbol& sym);
ChordSymbol center_to_chord(const CenterSymbol& sym);

// Odd-N re-centring x -> X = x + n/2 onto integer QPS labels, and back.
QpsCenterSymbol recenter_odd_n(const CenterSymbol& sym);
CenterSymbol recenter_to_half_labels(const QpsCenterSymbol& sym);

// Identity symbols: N delta_xi, f_N(x), and the QPS constant 1.
ChordSymbol identity_chord_symbol(const TorusSpace& space);
CenterSymbol identity_center_symbol(const TorusSpace& space);
QpsCenterSymbol identity_qps_symbol(const TorusSpace& space);

// Sign picked up by R when re-centred, and the QPS label of a half-label
// center (N odd): alpha2 = a2 + jN with j = a2 mod 2.
int recenter_sign(const TorusSpace& space, const CenterIndex& c);

// Recentred reflection R_X at integer QPS labels.
TorusOperator reflection_qps(const TorusSpace& space, std::int64_t alpha, std::int64_t beta);

// Center symbol of |psi><psi| / <psi|psi>, scaled by 1/N so that
// sum_{quarter} W(x) f_N(x) = 1 (the trace identity).
CenterSymbol wigner(const TorusState& state);

// Trace from symbols: Tr A = A(xi=0) = (1/N) sum_quarter A(x) f_N(x).
cplx trace_from_center(const CenterSymbol& sym);

}  // namespace torusweyl
