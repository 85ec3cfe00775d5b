#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fanout/rng.hpp"

namespace fanout {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Small sizes only (gate matrices and
// full-circuit unitaries up to 2^12).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        ComplexMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                Complex v = (*this)(i, k);
                if (v == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
            }
        }
        return out;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    ComplexMatrix scaled(Complex s) const {
        ComplexMatrix out = *this;
        for (auto& v : out.a_) v *= s;
        return out;
    }

    // Largest entrywise |this - rhs|.
    double max_abs_diff(const ComplexMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("max_abs_diff: shape mismatch");
        double m = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
        return m;
    }

    bool is_unitary(double tol = 1e-10) const {
        if (rows_ != cols_) return false;
        return (adjoint() * (*this)).max_abs_diff(identity(rows_)) <= tol;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

// True iff m1 == e^{i phi} m2 entrywise within tol, with phi read off the
// largest-magnitude entry of m2.
inline bool equiv_global_phase(const ComplexMatrix& m1, const ComplexMatrix& m2,
                               double tol = 1e-9) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
        throw std::invalid_argument("equiv_global_phase: shape mismatch");
    std::size_t bi = 0, bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < m2.rows(); ++i)
        for (std::size_t j = 0; j < m2.cols(); ++j)
            if (std::abs(m2(i, j)) > best) {
                best = std::abs(m2(i, j));
                bi = i;
                bj = j;
            }
    double phi = std::arg(m1(bi, bj)) - std::arg(m2(bi, bj));
    Complex ph = std::polar(1.0, phi);
    double m = 0.0;
    for (std::size_t i = 0; i < m1.rows(); ++i)
        for (std::size_t j = 0; j < m1.cols(); ++j)
            m = std::max(m, std::abs(m1(i, j) - ph * m2(i, j)));
    return m <= tol;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// Fixed single-qubit gate matrices. Conventions:
//   Rz(t) = diag(e^{-it/2}, e^{+it/2}),  P(phi) = diag(1, e^{i phi}),
//   T = P(pi/4), Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
namespace mats {

inline ComplexMatrix x() { return mat2(0, 1, 1, 0); }
inline ComplexMatrix h() {
    double s = 1.0 / std::sqrt(2.0);
    return mat2(s, s, s, -s);
}
inline ComplexMatrix p(double phi) { return mat2(1, 0, 0, std::polar(1.0, phi)); }
inline ComplexMatrix t() { return p(M_PI / 4.0); }
inline ComplexMatrix tdg() { return p(-M_PI / 4.0); }
inline ComplexMatrix rz(double theta) {
    return mat2(std::polar(1.0, -theta / 2.0), 0, 0, std::polar(1.0, theta / 2.0));
}
inline ComplexMatrix ry(double theta) {
    double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return mat2(c, -s, s, c);
}

}  // namespace mats

// Haar-random 2x2 unitary from the explicit parameterization
// e^{ia} [[e^{ip} cos t, e^{ix} sin t], [-e^{-ix} sin t, e^{-ip} cos t]]
// with t = asin(sqrt(xi)).
inline ComplexMatrix haar_unitary_2x2(Rng& rng) {
    double alpha = rng.uniform(0.0, 2.0 * M_PI);
    double psi = rng.uniform(0.0, 2.0 * M_PI);
    double chi = rng.uniform(0.0, 2.0 * M_PI);
    double theta = std::asin(std::sqrt(rng.uniform()));
    Complex ga = std::polar(1.0, alpha);
    double c = std::cos(theta), s = std::sin(theta);
    return mat2(ga * std::polar(c, psi), ga * std::polar(s, chi), -ga * std::polar(s, -chi),
                ga * std::polar(c, -psi));
}

}  // namespace fanout
