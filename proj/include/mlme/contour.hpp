// Hyperbolic and parabolic integration contours with trapezoid quadrature
// nodes, contour derivatives, and time-dependent coefficients.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_CONTOUR_HPP
#define MLME_CONTOUR_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "mlme/errors.hpp"
#include "mlme/tridiagonal.hpp"

namespace mlme {

enum class contour_kind { hyperbola, parabola };

// Hyperbola constants: mu = hyperbola_mu_factor * M / t, node spacing
// dxi = hyperbola_spacing / M, asymptotic half-angle parameter delta.
inline constexpr double hyperbola_spacing = 1.08179214;
inline constexpr double hyperbola_delta = 1.17210423;
inline constexpr double hyperbola_mu_factor = 4.49207528;

// Parabola constants (configuration defaults, scaled by L = 2M+1 over t):
// z(u) = (L/t) * (p0 - p2 u^2 + i p1 u), u in [-1, 1].
inline constexpr double parabola_p0 = 0.1309;
inline constexpr double parabola_p2 = 0.1194;
inline constexpr double parabola_p1 = 0.25;

struct contour_spec {
    contour_kind kind = contour_kind::hyperbola;
    int M = 16;          // quadrature half-count: 2M+1 nodes
    double t = 1.0;      // evaluation time
    double widen = 1.0;  // multiplicative widening applied to the scale

    void validate() const {
        if (M < 1) throw invalid_argument_error("contour M must be >= 1");
        if (!(t > 0)) throw invalid_argument_error("contour t must be positive");
        if (!(widen >= 1.0)) throw invalid_argument_error("widen must be >= 1");
    }
};

// Quadrature nodes z_k with coefficients c_k = spacing * dz_k * exp(z_k t) / (2 pi i).
// Nodes are ordered by the contour parameter; they come in conjugate pairs
// about center_index, built by reflecting the upper half so the pairing is
// bitwise exact.
struct quadrature_nodes {
    std::vector<complex> nodes;
    std::vector<complex> coeffs;
    std::size_t center_index = 0;
    bool symmetric = true;
    double t = 0.0;

    std::size_t size() const { return nodes.size(); }
};

// Hyperbola z(xi) = mu (1 - sin(delta - i xi)) sampled at xi_k = k * dxi,
// k = -M..M, with mu = widen * 4.49207528 * M / t.
inline quadrature_nodes hyperbola_nodes(double t, int M, double widen = 1.0) {
    contour_spec s{contour_kind::hyperbola, M, t, widen};
    s.validate();
    const double dxi = hyperbola_spacing / M;
    const double mu = widen * hyperbola_mu_factor * M / t;
    quadrature_nodes q;
    q.t = t;
    q.center_index = static_cast<std::size_t>(M);
    q.nodes.resize(2 * M + 1);
    q.coeffs.resize(2 * M + 1);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k <= M; ++k) {
        const double xi = k * dxi;
        // sin(delta - i xi), cos(delta - i xi) expanded in real/imag parts
        const complex sin_arg(std::sin(hyperbola_delta) * std::cosh(xi),
                              -std::cos(hyperbola_delta) * std::sinh(xi));
        const complex cos_arg(std::cos(hyperbola_delta) * std::cosh(xi),
                              std::sin(hyperbola_delta) * std::sinh(xi));
        const complex z = mu * (1.0 - sin_arg);
        const complex dz = complex(0.0, mu) * cos_arg;
        // c = dxi * dz * exp(z t) / (2 pi i)
        const complex c = dxi * dz * std::exp(z * t) / complex(0.0, two_pi);
        q.nodes[q.center_index + k] = z;
        q.coeffs[q.center_index + k] = c;
        q.nodes[q.center_index - k] = std::conj(z);
        q.coeffs[q.center_index - k] = std::conj(c);
    }
    return q;
}

// Parabola z(u) = (L widen / t)(p0 - p2 u^2 + i p1 u) with L = 2M+1 nodes at
// u_k = k/M, k = -M..M; coefficients use the trapezoid spacing du = 1/M.
inline quadrature_nodes parabola_nodes(double t, int M, double widen = 1.0) {
    contour_spec s{contour_kind::parabola, M, t, widen};
    s.validate();
    const double scale = widen * static_cast<double>(2 * M + 1) / t;
    const double du = 1.0 / M;
    quadrature_nodes q;
    q.t = t;
    q.center_index = static_cast<std::size_t>(M);
    q.nodes.resize(2 * M + 1);
    q.coeffs.resize(2 * M + 1);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k <= M; ++k) {
        const double u = k * du;
        const complex z = scale * complex(parabola_p0 - parabola_p2 * u * u, parabola_p1 * u);
        const complex dz = scale * complex(-2.0 * parabola_p2 * u, parabola_p1);
        const complex c = du * dz * std::exp(z * t) / complex(0.0, two_pi);
        q.nodes[q.center_index + k] = z;
        q.coeffs[q.center_index + k] = c;
        q.nodes[q.center_index - k] = std::conj(z);
        q.coeffs[q.center_index - k] = std::conj(c);
    }
    return q;
}

inline quadrature_nodes build_nodes(const contour_spec& s) {
    return s.kind == contour_kind::hyperbola ? hyperbola_nodes(s.t, s.M, s.widen)
                                             : parabola_nodes(s.t, s.M, s.widen);
}

// Drops nodes with Re z < cutoff (the contribution of the far left tail is
// annihilated by exp(z t)). Keeps coefficients unchanged.
struct cutoff_result {
    quadrature_nodes nodes;
    std::size_t dropped = 0;
};

inline cutoff_result nodes_for_negative_real_cutoff(const quadrature_nodes& q, double cutoff) {
    if (!(cutoff < 0)) throw invalid_argument_error("cutoff must be negative");
    cutoff_result r;
    r.nodes.t = q.t;
    std::size_t new_center = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.nodes[i].real() < cutoff) {
            ++r.dropped;
            continue;
        }
        if (i == q.center_index) new_center = r.nodes.nodes.size();
        r.nodes.nodes.push_back(q.nodes[i]);
        r.nodes.coeffs.push_back(q.coeffs[i]);
    }
    if (r.nodes.nodes.empty())
        throw all_nodes_dropped("cutoff removed every quadrature node");
    r.nodes.center_index = new_center;
    r.nodes.symmetric = q.symmetric;
    return r;
}

}  // namespace mlme

#endif  // MLME_CONTOUR_HPP
