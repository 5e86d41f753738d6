// Numeric properties of the real scalar type used by the templated kernels.
// Tests may specialize this for wider scalar types.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_REAL_TRAITS_HPP
#define MLME_REAL_TRAITS_HPP

#include <limits>
#include <numbers>

namespace mlme {

template <class Real>
struct real_traits {
    static Real eps() { return std::numeric_limits<Real>::epsilon(); }
    static Real tiny() { return std::numeric_limits<Real>::min() * Real(100); }
    static Real pi() { return Real(std::numbers::pi); }
};

}  // namespace mlme

#endif  // MLME_REAL_TRAITS_HPP
