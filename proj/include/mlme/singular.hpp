// Smallest singular value of a complex tridiagonal matrix by inverse
// iteration on M^H M, using two pivoted tridiagonal solves per step.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_SINGULAR_HPP
#define MLME_SINGULAR_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "mlme/lu.hpp"
#include "mlme/tridiagonal.hpp"

namespace mlme {

struct sigma_min_result {
    double value = 0.0;
    // set when the iteration stagnated and the current estimate was accepted
    // at a wide tolerance after the restart budget ran out
    bool wide_tolerance = false;
    int iterations = 0;
};

namespace detail {

inline std::vector<complex> complex_start_vector(std::size_t n, std::uint64_t seed) {
    std::vector<complex> v(n);
    std::uint64_t s = seed;
    auto next = [&s]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * (1.0 / 9007199254740992.0) - 0.5;
    };
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = complex(next(), next());
        norm2 += std::norm(v[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

inline double vector_norm(const std::vector<complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace detail

// sigma_min(M). Returns 0 when M is numerically singular (pivot underflow or
// overflow during the solves); callers treat the resolvent norm as +infinity.
inline sigma_min_result smallest_singular_value_detailed(const complex_tridiagonal& m,
                                                         double rel_tol = 1e-8,
                                                         int max_iterations = 400) {
    sigma_min_result out;
    if (m.n == 0) return out;
    tridiag_lu<complex> f = factor_complex(m);
    if (f.numerically_singular()) return out;
    tridiag_lu<complex> fh = factor_complex(adjoint_of(m));
    if (fh.numerically_singular()) return out;

    const int stagnation_window = 60;
    int restarts = 0;
    std::vector<complex> v = detail::complex_start_vector(m.n, 0x2545f4914f6cdd1dULL);
    double estimate = 0.0;
    bool have_estimate = false;
    int since_restart = 0;
    for (int it = 1; it <= max_iterations; ++it, ++since_restart) {
        f.solve(v);
        ++out.iterations;
        const double ny = detail::vector_norm(v);
        if (!std::isfinite(ny) || ny == 0.0) return sigma_min_result{};
        for (auto& x : v) x /= ny;
        fh.solve(v);
        const double nx = detail::vector_norm(v);
        if (!std::isfinite(nx) || nx == 0.0) return sigma_min_result{};
        for (auto& x : v) x /= nx;
        // growth of one application of (M M^H)^{-1}: ny * nx
        const double log_growth = std::log(ny) + std::log(nx);
        const double sigma = std::exp(-0.5 * log_growth);
        if (have_estimate && std::abs(sigma - estimate) <= rel_tol * sigma) {
            out.value = sigma;
            return out;
        }
        if (since_restart >= stagnation_window) {
            if (restarts < 3) {
                ++restarts;
                since_restart = 0;
                v = detail::complex_start_vector(m.n, 0x9e3779b97f4a7c15ULL * (restarts + 1));
                have_estimate = false;
                continue;
            }
            out.value = sigma;
            out.wide_tolerance = true;
            return out;
        }
        estimate = sigma;
        have_estimate = true;
    }
    out.value = estimate;
    out.wide_tolerance = true;
    return out;
}

inline double smallest_singular_value(const complex_tridiagonal& m) {
    return smallest_singular_value_detailed(m).value;
}

}  // namespace mlme

#endif  // MLME_SINGULAR_HPP
