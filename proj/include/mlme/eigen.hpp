// Diagonal symmetrization (gauge transform), Sturm-sequence bisection
// eigenvalues, inverse-iteration eigenvectors, rotated Hermitian parts and the
// numerical abscissa.
//
// The bisection/inverse-iteration core is templated on the real scalar type;
// double is the library type, and tests may instantiate a wider type to build
// reference solutions.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_EIGEN_HPP
#define MLME_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mlme/errors.hpp"
#include "mlme/lu.hpp"
#include "mlme/real_traits.hpp"
#include "mlme/tridiagonal.hpp"

namespace mlme {

// --- symmetrization ---------------------------------------------------------

// D A D^{-1} with positive diagonal D, d[0] = 1, d[i+1] = d[i] sqrt(sup/sub).
// Requires strictly positive off-diagonal products. The log of every d entry
// is kept alongside, since d itself can overflow for long strongly biased
// chains while T = D A D^{-1} stays perfectly representable.
struct symmetrization {
    gauge_scaling gauge;
    std::vector<double> log_gauge;
    symmetric_tridiagonal matrix;
};

inline symmetrization symmetrize(const tridiagonal_generator& a) {
    symmetrization s;
    s.gauge.d.assign(a.n, 1.0);
    s.log_gauge.assign(a.n, 0.0);
    s.matrix = symmetric_tridiagonal(a.n);
    s.matrix.diag = a.diag;
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
        const double prod = a.sup[k] * a.sub[k];
        if (!(prod > 0.0))
            throw not_symmetrizable(k, "off-diagonal product not positive at index " +
                                           std::to_string(k));
        s.matrix.off[k] = std::sqrt(prod);
        const double ratio = a.sup[k] / a.sub[k];
        s.gauge.d[k + 1] = s.gauge.d[k] * std::sqrt(ratio);
        s.log_gauge[k + 1] = s.log_gauge[k] + 0.5 * std::log(ratio);
    }
    return s;
}

// log10 condition number of the gauge, safe against d overflow.
inline double gauge_log10_condition(const symmetrization& s) {
    auto [lo, hi] = std::minmax_element(s.log_gauge.begin(), s.log_gauge.end());
    return (*hi - *lo) / std::log(10.0);
}

// --- Sturm counts and bisection ----------------------------------------------

// Number of eigenvalues of (diag, off) strictly below x, by the shifted LDL^T
// sign count.
template <class Real>
int sturm_count_below(const std::vector<Real>& diag, const std::vector<Real>& off2, Real x,
                      Real pivmin) {
    const std::size_t n = diag.size();
    int count = 0;
    Real q = diag[0] - x;
    if (q <= Real(0)) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (q == Real(0)) q = -pivmin;
        q = (diag[i] - x) - off2[i - 1] / q;
        if (q <= Real(0)) ++count;
    }
    return count;
}

template <class Real>
struct gershgorin_interval {
    Real lo, hi;
};

template <class Real>
gershgorin_interval<Real> gershgorin_bounds(const std::vector<Real>& diag,
                                            const std::vector<Real>& off) {
    using std::abs;
    const std::size_t n = diag.size();
    Real lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        Real r = Real(0);
        if (i > 0) r += abs(off[i - 1]);
        if (i + 1 < n) r += abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    return {lo, hi};
}

// Bisection for the eigenvalue of 0-based ascending index `index`.
template <class Real>
Real bisect_eigenvalue(const std::vector<Real>& diag, const std::vector<Real>& off2, int index,
                       Real lo, Real hi, Real abs_tol, Real rel_tol, Real pivmin) {
    using std::abs;
    Real a = lo, b = hi;
    while (true) {
        const Real width = b - a;
        const Real tol = std::max(abs_tol, rel_tol * std::max(abs(a), abs(b)));
        if (!(width > tol)) break;
        const Real mid = a + width / Real(2);
        if (mid <= a || mid >= b) break;  // interval no longer splittable
        if (sturm_count_below(diag, off2, mid, pivmin) >= index + 1)
            b = mid;
        else
            a = mid;
    }
    return a + (b - a) / Real(2);
}

template <class Real>
std::vector<Real> off_squares(const std::vector<Real>& off) {
    std::vector<Real> off2(off.size());
    for (std::size_t i = 0; i < off.size(); ++i) off2[i] = off[i] * off[i];
    return off2;
}

template <class Real>
Real default_pivmin(const std::vector<Real>& off2) {
    Real m = Real(1);
    for (const Real& v : off2) m = std::max(m, v);
    return std::max(real_traits<Real>::tiny(), real_traits<Real>::tiny() * m);
}

// All eigenvalues, ascending. abs_tol <= 0 selects a default floor well below
// the 1e-12*|T| contract so that a structurally exact zero eigenvalue is
// located to near machine absolute accuracy.
template <class Real>
std::vector<Real> symmetric_eigenvalues_t(const std::vector<Real>& diag,
                                          const std::vector<Real>& off, Real abs_tol = Real(0)) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    const std::vector<Real> off2 = off_squares(off);
    const Real pivmin = default_pivmin(off2);
    auto g = gershgorin_bounds(diag, off);
    const Real eps = real_traits<Real>::eps();
    using std::abs;
    const Real span = std::max(abs(g.lo), abs(g.hi)) + Real(1);
    g.lo -= eps * span;
    g.hi += eps * span;
    if (!(abs_tol > Real(0)))
        abs_tol = std::max(real_traits<Real>::tiny(), eps * span * Real(0.01));
    const Real rel_tol = Real(4) * eps;
    std::vector<Real> lam(n);
    for (std::size_t i = 0; i < n; ++i)
        lam[i] = bisect_eigenvalue(diag, off2, static_cast<int>(i), g.lo, g.hi, abs_tol, rel_tol,
                                   pivmin);
    return lam;
}

inline std::vector<double> symm_eigenvalues(const symmetric_tridiagonal& t) {
    return symmetric_eigenvalues_t<double>(t.diag, t.off);
}

// --- inverse iteration --------------------------------------------------------

namespace detail {

// Deterministic LCG-based start vector in [-1, 1].
template <class Real>
std::vector<Real> start_vector(std::size_t n, std::uint64_t seed) {
    std::vector<Real> v(n);
    std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (std::size_t i = 0; i < n; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        const double u = static_cast<double>(s >> 11) * (1.0 / 9007199254740992.0);
        v[i] = Real(2.0 * u - 1.0);
    }
    return v;
}

template <class Real>
Real norm2(const std::vector<Real>& v) {
    using std::sqrt;
    Real s = Real(0);
    for (const Real& x : v) s += x * x;
    return sqrt(s);
}

template <class Real>
void tridiag_multiply(const std::vector<Real>& diag, const std::vector<Real>& off,
                      const std::vector<Real>& x, std::vector<Real>& y) {
    const std::size_t n = diag.size();
    y.assign(n, Real(0));
    for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        y[k + 1] += off[k] * x[k];
        y[k] += off[k] * x[k + 1];
    }
}

}  // namespace detail

// Unit eigenvector for an already-converged eigenvalue, by inverse iteration.
// Orthogonalizes against `previous` (same-cluster vectors). Throws
// convergence_failure after max_steps.
template <class Real>
std::vector<Real> inverse_iteration_t(const std::vector<Real>& diag, const std::vector<Real>& off,
                                      Real lambda,
                                      const std::vector<std::vector<Real>>& previous = {},
                                      Real residual_tol = Real(1e-10), int max_steps = 100) {
    using std::abs;
    const std::size_t n = diag.size();
    Real tnorm = Real(0);
    for (std::size_t i = 0; i < n; ++i) {
        Real row = abs(diag[i]);
        if (i > 0) row += abs(off[i - 1]);
        if (i + 1 < n) row += abs(off[i]);
        tnorm = std::max(tnorm, row);
    }
    if (tnorm == Real(0)) tnorm = Real(1);
    const Real eps = real_traits<Real>::eps();

    std::vector<Real> shifted_diag(n);
    std::vector<Real> sub(off.begin(), off.end());
    tridiag_lu<Real> lu;
    Real shift = lambda;
    for (int attempt = 0;; ++attempt) {
        for (std::size_t i = 0; i < n; ++i) shifted_diag[i] = diag[i] - shift;
        lu.factor(sub, shifted_diag, sub);
        if (!lu.numerically_singular() || attempt >= 3) break;
        // nudge an exactly singular shift off the eigenvalue
        shift = lambda + tnorm * eps * Real(attempt + 1);
    }

    std::vector<Real> v = detail::start_vector<Real>(n, 0x9e3779b97f4a7c15ULL + n);
    std::vector<Real> work;
    for (int step = 0; step < max_steps; ++step) {
        lu.solve(v);
        for (const auto& p : previous) {
            Real dot = Real(0);
            for (std::size_t i = 0; i < n; ++i) dot += p[i] * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * p[i];
        }
        Real nv = detail::norm2(v);
        if (!(nv > Real(0))) {
            v = detail::start_vector<Real>(n, 0x51afd7ed558ccd89ULL + step);
            continue;
        }
        for (auto& x : v) x /= nv;
        detail::tridiag_multiply(diag, off, v, work);
        Real resid = Real(0);
        for (std::size_t i = 0; i < n; ++i) {
            const Real r = work[i] - lambda * v[i];
            resid += r * r;
        }
        using std::sqrt;
        resid = sqrt(resid);
        if (resid <= residual_tol * tnorm) return v;
    }
    throw convergence_failure("inverse iteration did not converge in " +
                              std::to_string(max_steps) + " steps");
}

enum class extreme { max, min };

struct eigenpair {
    double value = 0.0;
    std::vector<double> vector;
};

// Extreme eigenvalue by bisection, then its eigenvector by inverse iteration.
inline eigenpair symm_extreme_eigenpair(const symmetric_tridiagonal& t, extreme which) {
    const std::vector<double> off2 = off_squares(t.off);
    const double pivmin = default_pivmin(off2);
    auto g = gershgorin_bounds(t.diag, t.off);
    const double span = std::max(std::abs(g.lo), std::abs(g.hi)) + 1.0;
    const double eps = real_traits<double>::eps();
    const int index = which == extreme::max ? static_cast<int>(t.n) - 1 : 0;
    const double abs_tol = std::max(real_traits<double>::tiny(), eps * span * 0.01);
    eigenpair p;
    p.value = bisect_eigenvalue(t.diag, off2, index, g.lo - eps * span, g.hi + eps * span, abs_tol,
                                4.0 * eps, pivmin);
    p.vector = inverse_iteration_t<double>(t.diag, t.off, p.value);
    return p;
}

// --- rotated Hermitian parts and the numerical abscissa ------------------------

// Real symmetric tridiagonal unitarily similar to the Hermitian part of
// e^{i theta} A: diag = cos(theta) * A.diag, off = |e^{i theta} sup + e^{-i theta} sub| / 2.
inline symmetric_tridiagonal rotated_hermitian_part(const tridiagonal_generator& a, double theta) {
    symmetric_tridiagonal t(a.n);
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t i = 0; i < a.n; ++i) t.diag[i] = c * a.diag[i];
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
        const double re = 0.5 * c * (a.sup[k] + a.sub[k]);
        const double im = 0.5 * s * (a.sup[k] - a.sub[k]);
        t.off[k] = std::hypot(re, im);
    }
    return t;
}

// Same reduction, also returning the diagonal unitary U (u[0] = 1) with
// U H U^* = T, so eigenvectors of H are recovered as U^* y.
struct rotated_hermitian {
    symmetric_tridiagonal matrix;
    std::vector<complex> unitary_diag;
};

inline rotated_hermitian rotated_hermitian_with_phases(const tridiagonal_generator& a,
                                                       double theta) {
    rotated_hermitian r;
    r.matrix = symmetric_tridiagonal(a.n);
    r.unitary_diag.assign(a.n, complex(1.0, 0.0));
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t i = 0; i < a.n; ++i) r.matrix.diag[i] = c * a.diag[i];
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
        const complex w(0.5 * c * (a.sup[k] + a.sub[k]), 0.5 * s * (a.sup[k] - a.sub[k]));
        const double mag = std::abs(w);
        r.matrix.off[k] = mag;
        r.unitary_diag[k + 1] = mag > 0.0 ? r.unitary_diag[k] * (w / mag) : r.unitary_diag[k];
    }
    return r;
}

// (1/2) max eig(A + A^T): the rightmost reach of the field of values.
inline double numerical_abscissa(const tridiagonal_generator& a) {
    const symmetric_tridiagonal h = rotated_hermitian_part(a, 0.0);
    const std::vector<double> off2 = off_squares(h.off);
    auto g = gershgorin_bounds(h.diag, h.off);
    const double span = std::max(std::abs(g.lo), std::abs(g.hi)) + 1.0;
    const double eps = real_traits<double>::eps();
    const double abs_tol = std::max(real_traits<double>::tiny(), eps * span * 0.01);
    return bisect_eigenvalue(h.diag, off2, static_cast<int>(h.n) - 1, g.lo - eps * span,
                             g.hi + eps * span, abs_tol, 4.0 * eps, default_pivmin(off2));
}

}  // namespace mlme

#endif  // MLME_EIGEN_HPP
