#pragma once

#include <Eigen/Dense>
#include <complex>

#include "torusweyl/lattice.hpp"

namespace torusweyl {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense N x N operator in the |q_n> basis; entry (m, n) = <q_m|A|q_n>.
//
// Basis conventions, all downstream algebra follows from these two actions
// plus the index wrap |q_{n+kN}> = exp(-i 2pi k chi_p) |q_n>:
//   T_{r,s} |q_n> = exp(i 2pi/N r(n + chi_q + s/2)) |q_{n+s}>
//   R_{a,b} |q_n> = exp(i 2pi/N 2(b - n)(a + chi_p)) |q_{2b-n}>
class TorusOperator {
public:
    TorusOperator(TorusSpace space, Matrix m) : space_(space), m_(std::move(m)) {
        if (m_.rows() != space_.n || m_.cols() != space_.n)
            throw std::invalid_argument("TorusOperator: matrix size does not match space");
    }

    const TorusSpace& space() const { return space_; }
    const Matrix& matrix() const { return m_; }

    cplx trace() const { return m_.trace(); }
    TorusOperator adjoint() const { return {space_, m_.adjoint()}; }

    bool is_hermitian(double tol = 1e-10) const {
        return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }
    bool is_unitary(double tol = 1e-10) const {
        Matrix d = m_ * m_.adjoint() - Matrix::Identity(space_.n, space_.n);
        return d.cwiseAbs().maxCoeff() <= tol;
    }

    TorusOperator operator*(const TorusOperator& o) const {
        require_same_space(o);
        return {space_, m_ * o.m_};
    }
    TorusOperator operator+(const TorusOperator& o) const {
        require_same_space(o);
        return {space_, m_ + o.m_};
    }
    TorusOperator operator-(const TorusOperator& o) const {
        require_same_space(o);
        return {space_, m_ - o.m_};
    }
    friend TorusOperator operator*(cplx c, const TorusOperator& a) {
        return {a.space_, c * a.m_};
    }

    double max_abs_diff(const TorusOperator& o) const {
        require_same_space(o);
        return (m_ - o.m_).cwiseAbs().maxCoeff();
    }

private:
    void require_same_space(const TorusOperator& o) const {
        if (!(space_ == o.space_))
            throw std::invalid_argument("TorusOperator: space mismatch");
    }

    TorusSpace space_;
    Matrix m_;
};

// State vector in the |q_n> basis.
class TorusState {
public:
    TorusState(TorusSpace space, Vector amps) : space_(space), a_(std::move(amps)) {
        if (a_.size() != space_.n)
            throw std::invalid_argument("TorusState: amplitude count does not match space");
    }

    const TorusSpace& space() const { return space_; }
    const Vector& amplitudes() const { return a_; }
    double norm() const { return a_.norm(); }

    TorusState normalized() const {
        const double nn = a_.norm();
        if (nn < 1e-14) throw std::invalid_argument("TorusState: cannot normalize zero vector");
        return {space_, a_ / nn};
    }

    static TorusState position_basis(const TorusSpace& space, int n) {
        if (n < 0 || n >= space.n) throw std::out_of_range("position_basis: index out of range");
        Vector v = Vector::Zero(space.n);
        v(n) = 1.0;
        return {space, v};
    }

private:
    TorusSpace space_;
    Vector a_;
};

TorusOperator identity_operator(const TorusSpace& space);

// Finite Fourier kernel F_{m,n} = N^{-1/2} exp(i 2pi (m+chi_p)(n+chi_q)/N).
TorusOperator fourier_kernel(const TorusSpace& space);

// Translation T_{r,s}; the chord may lie outside the fundamental domain.
TorusOperator translation(const TorusSpace& space, const ChordIndex& chord);

// Reflection R_x about x = ((a2/2 + chi_p)/N, (b2/2 + chi_q)/N).
TorusOperator reflection(const TorusSpace& space, const CenterIndex& center);

// Fourier sum (1/2N) sum_{a,b} exp(-i 2pi N x^xi) R_x over the doubled grid;
// equals translation(space, chord) and exists as an independent route.
TorusOperator translation_from_reflections(const TorusSpace& space, const ChordIndex& chord);

// Minimal position / momentum shifts T_{0,1} and T_{1,0}.
TorusOperator schwinger_tq(const TorusSpace& space);
TorusOperator schwinger_tp(const TorusSpace& space);

// Orthonormal embedding of the N-state space into the nu^2 N big torus,
// returned as the (nu^2 N) x N matrix of embedded basis columns.
// Requires big.chi = nu * small.chi - k for an integer vector k.
Matrix nested_embedding(const TorusSpace& big, const TorusSpace& small, int nu);

// Rank-N projector sum_n |q_n,N><q_n,N| acting on the big space.
TorusOperator nested_projector(const TorusSpace& big, const TorusSpace& small, int nu);

}  // namespace torusweyl
