// Tridiagonal LU factorization with row partial pivoting and the shifted
// solve (z*I - s*A) u = rhs built on top of it.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_LU_HPP
#define MLME_LU_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "mlme/errors.hpp"
#include "mlme/tridiagonal.hpp"

namespace mlme {

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& x) { return std::abs(x); }

// Generator of magnitudes below which a pivot counts as exactly singular.
inline constexpr double pivot_underflow_threshold = 1e-300;

// LU factors of a tridiagonal matrix with partial pivoting. Pivoting
// introduces one extra superdiagonal of fill-in.
template <class Scalar>
struct tridiag_lu {
    using real_type = decltype(abs_of(Scalar()));

    std::size_t n = 0;
    std::vector<Scalar> low;    // elimination multipliers, length n-1
    std::vector<Scalar> d;      // U diagonal, length n
    std::vector<Scalar> u1;     // U first superdiagonal, length n-1
    std::vector<Scalar> u2;     // U second superdiagonal, length n-2
    std::vector<char> swapped;  // row swap performed at step k?
    real_type min_pivot{};
    std::size_t min_pivot_index = 0;

    bool numerically_singular() const {
        return !(min_pivot > real_type(pivot_underflow_threshold));
    }

    void factor(const std::vector<Scalar>& sub, const std::vector<Scalar>& diag,
                const std::vector<Scalar>& sup) {
        n = diag.size();
        low.assign(n > 0 ? n - 1 : 0, Scalar(0));
        d = diag;
        u1 = sup;
        u2.assign(n > 1 ? n - 2 : 0, Scalar(0));
        swapped.assign(n > 0 ? n - 1 : 0, 0);
        min_pivot = n > 0 ? abs_of(d[0]) : real_type(0);
        min_pivot_index = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const real_type dk = abs_of(d[k]);
            const real_type sk = abs_of(sub[k]);
            if (dk >= sk) {
                swapped[k] = 0;
                Scalar l = (dk > real_type(0)) ? sub[k] / d[k] : Scalar(0);
                low[k] = l;
                d[k + 1] = d[k + 1] - l * u1[k];
                // u2[k] stays zero
            } else {
                swapped[k] = 1;
                Scalar l = d[k] / sub[k];
                low[k] = l;
                const Scalar row_d = sub[k];
                const Scalar row_u1 = d[k + 1];
                const Scalar row_u2 = (k + 2 < n) ? u1[k + 1] : Scalar(0);
                d[k + 1] = u1[k] - l * row_u1;
                if (k + 2 < n) u1[k + 1] = -l * row_u2;
                d[k] = row_d;
                u1[k] = row_u1;
                if (k + 2 < n) u2[k] = row_u2;
            }
            track_pivot(k);
        }
        if (n > 0) track_pivot(n - 1);
    }

    // Solves (LU) x = b in place.
    void solve(std::vector<Scalar>& b) const {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (swapped[k]) std::swap(b[k], b[k + 1]);
            b[k + 1] = b[k + 1] - low[k] * b[k];
        }
        for (std::size_t ip = n; ip-- > 0;) {
            Scalar acc = b[ip];
            if (ip + 1 < n) acc = acc - u1[ip] * b[ip + 1];
            if (ip + 2 < n) acc = acc - u2[ip] * b[ip + 2];
            b[ip] = acc / d[ip];
        }
    }

private:
    void track_pivot(std::size_t k) {
        const real_type mag = abs_of(d[k]);
        if (k == 0 || mag < min_pivot) {
            min_pivot = mag;
            min_pivot_index = k;
        }
    }
};

inline tridiag_lu<complex> factor_complex(const complex_tridiagonal& m) {
    tridiag_lu<complex> f;
    f.factor(m.sub, m.diag, m.sup);
    return f;
}

inline complex_tridiagonal adjoint_of(const complex_tridiagonal& m) {
    complex_tridiagonal h(m.n);
    for (std::size_t i = 0; i < m.n; ++i) h.diag[i] = std::conj(m.diag[i]);
    for (std::size_t k = 0; k + 1 < m.n; ++k) {
        h.sub[k] = std::conj(m.sup[k]);
        h.sup[k] = std::conj(m.sub[k]);
    }
    return h;
}

// Solves (z*I - s*A) u = rhs by pivoted tridiagonal LU. Throws singular_shift
// when a pivot underflows (z numerically on the spectrum of s*A).
inline std::vector<complex> solve_shifted(const tridiagonal_generator& a, complex z, complex s,
                                          const std::vector<complex>& rhs) {
    if (rhs.size() != a.n) throw invalid_argument_error("rhs length mismatch");
    const complex_tridiagonal m = shifted_matrix(a, z, s);
    tridiag_lu<complex> f = factor_complex(m);
    if (f.numerically_singular())
        throw singular_shift(f.min_pivot_index,
                             "pivot underflow at index " + std::to_string(f.min_pivot_index) +
                                 ": shift lies on the spectrum");
    std::vector<complex> u = rhs;
    f.solve(u);
    return u;
}

}  // namespace mlme

#endif  // MLME_LU_HPP
