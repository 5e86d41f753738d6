// Model zoo: generator matrices for the monomolecular, bimolecular, Schlogl
// and random-walk models, their reaction propensities, and the drift/diffusion
// coefficients of the matching Fokker-Planck operator.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_MODELS_HPP
#define MLME_MODELS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mlme/errors.hpp"
#include "mlme/tridiagonal.hpp"

namespace mlme {

enum class model_kind { monomolecular, bimolecular, schlogl, random_walk };

inline const char* to_string(model_kind k) {
    switch (k) {
        case model_kind::monomolecular: return "mono";
        case model_kind::bimolecular: return "bi";
        case model_kind::schlogl: return "schlogl";
        case model_kind::random_walk: return "walk";
    }
    return "?";
}

// Which reaction model to build, plus rate parameters and truncation size.
//
// States are indexed 0-based in storage; the 1-based column j of the rate
// formulas corresponds to storage index j-1, i.e. a state with j-1 tracked
// molecules.
struct model_spec {
    model_kind kind = model_kind::monomolecular;
    // maximum molecule count (mono/bi) or lattice endpoint (walk); for the
    // Schlogl model n is a free truncation size and m is ignored.
    std::size_t m = 0;
    double c1 = 1.0, c2 = 1.0;                       // mono/bi rates
    double k1 = 3e-7, k2 = 1e-4, k3 = 1e-3, k4 = 3.5;  // Schlogl rates
    double B1 = 1e5, B2 = 2e5;                       // Schlogl reservoirs
    std::size_t n = 0;  // matrix dimension; n = m+1 except for Schlogl

    static model_spec monomolecular(std::size_t m, double c1 = 1.0, double c2 = 1.0) {
        model_spec s;
        s.kind = model_kind::monomolecular;
        s.m = m; s.c1 = c1; s.c2 = c2; s.n = m + 1;
        return s;
    }
    static model_spec bimolecular(std::size_t m, double c1 = 1.0, double c2 = 1.0) {
        model_spec s;
        s.kind = model_kind::bimolecular;
        s.m = m; s.c1 = c1; s.c2 = c2; s.n = m + 1;
        return s;
    }
    static model_spec schlogl(std::size_t n) {
        model_spec s;
        s.kind = model_kind::schlogl;
        s.n = n; s.m = n - 1;
        return s;
    }
    static model_spec random_walk(std::size_t m) {
        model_spec s;
        s.kind = model_kind::random_walk;
        s.m = m; s.n = m + 1;
        return s;
    }

    void validate() const {
        if (n < 2) throw invalid_argument_error("model dimension must be at least 2");
        if (kind != model_kind::schlogl && n != m + 1)
            throw invalid_argument_error("n must equal m+1 for this model");
        if (kind == model_kind::monomolecular || kind == model_kind::bimolecular) {
            if (c1 <= 0 || c2 <= 0) throw invalid_argument_error("rates c1, c2 must be positive");
        }
        if (kind == model_kind::schlogl) {
            if (k1 <= 0 || k2 <= 0 || k3 <= 0 || k4 <= 0 || B1 <= 0 || B2 <= 0)
                throw invalid_argument_error("Schlogl rates k1..k4, B1, B2 must be positive");
        }
    }
};

namespace detail {

inline void close_columns(tridiagonal_generator& a) {
    // diag[j] = -(rate up out of j + rate down out of j) so columns sum to 0
    for (std::size_t j = 0; j < a.n; ++j) {
        double out = 0.0;
        if (j + 1 < a.n) out += a.sub[j];
        if (j > 0) out += a.sup[j - 1];
        a.diag[j] = -out;
    }
}

}  // namespace detail

// S1 <-> S2 with unit-rate case reproducing the displayed m=5 matrix.
// Column j (state x = j-1 molecules of S2): up rate c1*(m-x), down rate c2*x.
inline tridiagonal_generator build_monomolecular(const model_spec& spec) {
    spec.validate();
    tridiagonal_generator a(spec.n);
    const double m = static_cast<double>(spec.m);
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
        a.sub[k] = spec.c1 * (m - static_cast<double>(k));       // A[k+1,k]
        a.sup[k] = spec.c2 * static_cast<double>(k + 1);         // A[k,k+1]
    }
    detail::close_columns(a);
    return a;
}

// S1 + S2 <-> S3, effectively one-dimensional in x = #S3.
// Column j (state x = j-1): up rate c2*(m-x)^2, down rate c1*x.
inline tridiagonal_generator build_bimolecular(const model_spec& spec) {
    spec.validate();
    tridiagonal_generator a(spec.n);
    const double m = static_cast<double>(spec.m);
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
        const double up = m - static_cast<double>(k);
        a.sub[k] = spec.c2 * up * up;
        a.sup[k] = spec.c1 * static_cast<double>(k + 1);
    }
    detail::close_columns(a);
    return a;
}

// Schlogl reactions B1 + 2X <-> 3X, B2 <-> X, truncated to a finite section.
// Column j: down rate (1/6)k2(j-1)(j-2)(j-3) + k4(j-1), up rate
// k3*B2 + (1/2)k1*B1(j-1)(j-2), with j = storage index + 1.
inline tridiagonal_generator build_schlogl(const model_spec& spec) {
    spec.validate();
    tridiagonal_generator a(spec.n);
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
        const double x_up = static_cast<double>(k);      // state of column k
        const double x_dn = static_cast<double>(k + 1);  // state of column k+1
        a.sub[k] = spec.k3 * spec.B2 + 0.5 * spec.k1 * spec.B1 * x_up * (x_up - 1.0);
        a.sup[k] = (1.0 / 6.0) * spec.k2 * x_dn * (x_dn - 1.0) * (x_dn - 2.0) + spec.k4 * x_dn;
    }
    detail::close_columns(a);
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
        if (!std::isfinite(a.sub[k]) || !std::isfinite(a.sup[k]))
            throw invalid_argument_error("Schlogl rate overflow at column " + std::to_string(k));
    }
    return a;
}

// Random walk on 0..m: one-dimensional Laplacian with reflecting ends.
inline tridiagonal_generator build_random_walk(const model_spec& spec) {
    spec.validate();
    tridiagonal_generator a(spec.n);
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
        a.sub[k] = 1.0;
        a.sup[k] = 1.0;
    }
    detail::close_columns(a);
    return a;
}

inline tridiagonal_generator build_generator(const model_spec& spec) {
    switch (spec.kind) {
        case model_kind::monomolecular: return build_monomolecular(spec);
        case model_kind::bimolecular: return build_bimolecular(spec);
        case model_kind::schlogl: return build_schlogl(spec);
        case model_kind::random_walk: return build_random_walk(spec);
    }
    throw invalid_argument_error("unknown model kind");
}

// --- reaction-channel view -------------------------------------------------

struct propensity_set {
    std::vector<double> rates;
    std::vector<std::vector<std::int64_t>> changes;  // one change vector per channel
};

// Dimension of the full state vector: (S1,S2) for mono, (S1,S2,S3) for bi,
// scalar molecule counts for Schlogl and the walk.
inline std::size_t state_dimension(const model_spec& spec) {
    switch (spec.kind) {
        case model_kind::monomolecular: return 2;
        case model_kind::bimolecular: return 3;
        default: return 1;
    }
}

// Full state vector for lattice coordinate x (the tracked coordinate).
inline std::vector<std::int64_t> lattice_state(const model_spec& spec, std::int64_t x) {
    const auto m = static_cast<std::int64_t>(spec.m);
    switch (spec.kind) {
        case model_kind::monomolecular: return {m - x, x};       // x = #S2
        case model_kind::bimolecular: return {m - x, m - x, x};  // x = #S3
        default: return {x};
    }
}

// The tracked lattice coordinate of a full state.
inline std::int64_t lattice_coordinate(const model_spec& spec, const std::vector<std::int64_t>& state) {
    switch (spec.kind) {
        case model_kind::monomolecular: return state.at(1);
        case model_kind::bimolecular: return state.at(2);
        default: return state.at(0);
    }
}

inline void check_on_lattice(const model_spec& spec, const std::vector<std::int64_t>& state) {
    if (state.size() != state_dimension(spec))
        throw invalid_argument_error("state dimension mismatch");
    for (auto v : state)
        if (v < 0) throw invalid_argument_error("state has negative molecule count");
    const auto m = static_cast<std::int64_t>(spec.m);
    const std::int64_t x = lattice_coordinate(spec, state);
    switch (spec.kind) {
        case model_kind::monomolecular:
            if (state[0] + state[1] != m) throw invalid_argument_error("state off the S1+S2=m lattice");
            break;
        case model_kind::bimolecular:
            if (state[0] != m - x || state[1] != m - x)
                throw invalid_argument_error("state off the bimolecular conservation lattice");
            break;
        case model_kind::random_walk:
            if (x > m) throw invalid_argument_error("walker outside 0..m");
            break;
        case model_kind::schlogl:
            if (x >= static_cast<std::int64_t>(spec.n))
                throw invalid_argument_error("Schlogl state outside the truncated section");
            break;
    }
}

// Reaction rates and state-change vectors at a state. For every interior
// state x the summed up/down rates reproduce the matrix column off-diagonals.
inline propensity_set propensities(const model_spec& spec, const std::vector<std::int64_t>& state) {
    spec.validate();
    check_on_lattice(spec, state);
    propensity_set p;
    switch (spec.kind) {
        case model_kind::monomolecular: {
            const double s1 = static_cast<double>(state[0]);
            const double s2 = static_cast<double>(state[1]);
            p.rates = {spec.c1 * s1, spec.c2 * s2};
            p.changes = {{-1, +1}, {+1, -1}};
            break;
        }
        case model_kind::bimolecular: {
            const double s1 = static_cast<double>(state[0]);
            const double s2 = static_cast<double>(state[1]);
            const double s3 = static_cast<double>(state[2]);
            p.rates = {spec.c1 * s3, spec.c2 * s1 * s2};
            p.changes = {{+1, +1, -1}, {-1, -1, +1}};
            break;
        }
        case model_kind::schlogl: {
            const double x = static_cast<double>(state[0]);
            const bool at_top = state[0] + 1 >= static_cast<std::int64_t>(spec.n);
            // birth channels vanish at the truncation boundary so paths stay
            // inside the finite section
            const double birth1 = at_top ? 0.0 : 0.5 * spec.k1 * spec.B1 * x * (x - 1.0);
            const double birth2 = at_top ? 0.0 : spec.k3 * spec.B2;
            const double death1 = (1.0 / 6.0) * spec.k2 * x * (x - 1.0) * (x - 2.0);
            const double death2 = spec.k4 * x;
            p.rates = {birth1, death1, birth2, death2};
            p.changes = {{+1}, {-1}, {+1}, {-1}};
            break;
        }
        case model_kind::random_walk: {
            const auto x = state[0];
            p.rates = {x > 0 ? 1.0 : 0.0,
                       x < static_cast<std::int64_t>(spec.m) ? 1.0 : 0.0};
            p.changes = {{-1}, {+1}};
            break;
        }
    }
    return p;
}

// --- Fokker-Planck coefficients ---------------------------------------------

// Drift a(x), diffusion b(x), and B(x) = -a(x) + b'(x)/2 on [0, m]. The
// derivative callables are analytic (the coefficients are polynomials).
struct pde_coefficients {
    double domain_m = 0.0;
    std::function<double(double)> a;
    std::function<double(double)> b;
    std::function<double(double)> B;
    std::function<double(double)> b_prime;
    std::function<double(double)> B_prime;
};

inline pde_coefficients pde_coefficients_for(const model_spec& spec) {
    spec.validate();
    pde_coefficients c;
    c.domain_m = static_cast<double>(spec.m);
    switch (spec.kind) {
        case model_kind::monomolecular: {
            const double c1 = spec.c1, c2 = spec.c2, m = c.domain_m;
            c.a = [=](double x) { return -c1 * x + c2 * (m - x); };
            c.b = [=](double x) { return c1 * x + c2 * (m - x); };
            c.b_prime = [=](double) { return c1 - c2; };
            c.B = [=](double x) { return c1 * x - c2 * (m - x) + 0.5 * (c1 - c2); };
            c.B_prime = [=](double) { return c1 + c2; };
            break;
        }
        case model_kind::bimolecular: {
            const double c1 = spec.c1, c2 = spec.c2, m = c.domain_m;
            c.a = [=](double x) { return -c1 * x + c2 * (m - x) * (m - x); };
            c.b = [=](double x) { return c1 * x + c2 * (m - x) * (m - x); };
            c.b_prime = [=](double x) { return c1 - 2.0 * c2 * (m - x); };
            c.B = [=](double x) {
                return c1 * x - c2 * (m - x) * (m - x) + 0.5 * (c1 - 2.0 * c2 * (m - x));
            };
            c.B_prime = [=](double x) { return c1 + 2.0 * c2 * (m - x) + c2; };
            break;
        }
        case model_kind::schlogl: {
            const double k1B1 = spec.k1 * spec.B1, k2 = spec.k2, k3B2 = spec.k3 * spec.B2,
                         k4 = spec.k4;
            c.domain_m = static_cast<double>(spec.n - 1);
            c.a = [=](double x) {
                return k3B2 + 0.5 * k1B1 * x * (x - 1.0) - (1.0 / 6.0) * k2 * x * (x - 1.0) * (x - 2.0) -
                       k4 * x;
            };
            c.b = [=](double x) {
                return k3B2 + 0.5 * k1B1 * x * (x - 1.0) + (1.0 / 6.0) * k2 * x * (x - 1.0) * (x - 2.0) +
                       k4 * x;
            };
            c.b_prime = [=](double x) {
                return 0.5 * k1B1 * (2.0 * x - 1.0) + (1.0 / 6.0) * k2 * (3.0 * x * x - 6.0 * x + 2.0) +
                       k4;
            };
            c.B = [a = c.a, bp = c.b_prime](double x) { return -a(x) + 0.5 * bp(x); };
            c.B_prime = [=](double x) {
                const double a_prime = 0.5 * k1B1 * (2.0 * x - 1.0) -
                                       (1.0 / 6.0) * k2 * (3.0 * x * x - 6.0 * x + 2.0) - k4;
                const double b_second = k1B1 + k2 * (x - 1.0);
                return -a_prime + 0.5 * b_second;
            };
            break;
        }
        case model_kind::random_walk:
            throw invalid_argument_error("no PDE coefficients are defined for the random walk");
    }
    return c;
}

}  // namespace mlme

#endif  // MLME_MODELS_HPP
