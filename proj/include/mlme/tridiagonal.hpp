// Tridiagonal matrix value types: the real generator, its complex shifts, the
// symmetrized form, and the diagonal gauge scaling.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_TRIDIAGONAL_HPP
#define MLME_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "mlme/errors.hpp"

namespace mlme {

using complex = std::complex<double>;

// Real tridiagonal generator matrix. Storage is 0-based: sub[k] = A[k+1,k],
// diag[k] = A[k,k], sup[k] = A[k,k+1]. The model builders keep columns summing
// to zero and off-diagonals nonnegative.
struct tridiagonal_generator {
    std::size_t n = 0;
    std::vector<double> sub;   // length n-1
    std::vector<double> diag;  // length n
    std::vector<double> sup;   // length n-1

    tridiagonal_generator() = default;
    explicit tridiagonal_generator(std::size_t size)
        : n(size), sub(size > 0 ? size - 1 : 0, 0.0), diag(size, 0.0),
          sup(size > 0 ? size - 1 : 0, 0.0) {}

    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = std::abs(diag[i]);
            if (i > 0) row += std::abs(sub[i - 1]);
            if (i + 1 < n) row += std::abs(sup[i]);
            best = std::max(best, row);
        }
        return best;
    }

    // y = A x
    template <class Scalar>
    void multiply(const std::vector<Scalar>& x, std::vector<Scalar>& y) const {
        y.assign(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i) y[i] = Scalar(diag[i]) * x[i];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            y[k + 1] += Scalar(sub[k]) * x[k];
            y[k] += Scalar(sup[k]) * x[k + 1];
        }
    }
};

// Complex tridiagonal matrix, same layout. Used for the shifted systems
// z*I - s*A and for singular-value probes of the resolvent.
struct complex_tridiagonal {
    std::size_t n = 0;
    std::vector<complex> sub;
    std::vector<complex> diag;
    std::vector<complex> sup;

    complex_tridiagonal() = default;
    explicit complex_tridiagonal(std::size_t size)
        : n(size), sub(size > 0 ? size - 1 : 0), diag(size),
          sup(size > 0 ? size - 1 : 0) {}

    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = std::abs(diag[i]);
            if (i > 0) row += std::abs(sub[i - 1]);
            if (i + 1 < n) row += std::abs(sup[i]);
            best = std::max(best, row);
        }
        return best;
    }

    void multiply(const std::vector<complex>& x, std::vector<complex>& y) const {
        y.assign(n, complex(0));
        for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            y[k + 1] += sub[k] * x[k];
            y[k] += sup[k] * x[k + 1];
        }
    }

    // y = A^H x
    void multiply_adjoint(const std::vector<complex>& x, std::vector<complex>& y) const {
        y.assign(n, complex(0));
        for (std::size_t i = 0; i < n; ++i) y[i] = std::conj(diag[i]) * x[i];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            y[k] += std::conj(sub[k]) * x[k + 1];
            y[k + 1] += std::conj(sup[k]) * x[k];
        }
    }
};

// z*I - s*A as a complex tridiagonal.
inline complex_tridiagonal shifted_matrix(const tridiagonal_generator& a, complex z, complex s) {
    complex_tridiagonal m(a.n);
    for (std::size_t i = 0; i < a.n; ++i) m.diag[i] = z - s * a.diag[i];
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
        m.sub[k] = -s * a.sub[k];
        m.sup[k] = -s * a.sup[k];
    }
    return m;
}

// Real symmetric tridiagonal matrix (diag, off).
struct symmetric_tridiagonal {
    std::size_t n = 0;
    std::vector<double> diag;
    std::vector<double> off;  // length n-1

    symmetric_tridiagonal() = default;
    explicit symmetric_tridiagonal(std::size_t size)
        : n(size), diag(size, 0.0), off(size > 0 ? size - 1 : 0, 0.0) {}

    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = std::abs(diag[i]);
            if (i > 0) row += std::abs(off[i - 1]);
            if (i + 1 < n) row += std::abs(off[i]);
            best = std::max(best, row);
        }
        return best;
    }

    void multiply(const std::vector<double>& x, std::vector<double>& y) const {
        y.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            y[k + 1] += off[k] * x[k];
            y[k] += off[k] * x[k + 1];
        }
    }
};

// Positive diagonal D with d[0] = 1 such that D A D^{-1} is symmetric.
struct gauge_scaling {
    std::vector<double> d;

    double condition() const {
        double lo = d.empty() ? 1.0 : d[0];
        double hi = lo;
        for (double v : d) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi / lo;
    }
};

}  // namespace mlme

#endif  // MLME_TRIDIAGONAL_HPP
