// Shared fixtures and tiny independent oracles for the test suite. The
// oracles here (kron, remap, hand partial trace) deliberately avoid the
// library's own index machinery where they are used to check it.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mape/gallery.hpp"
#include "mape/state.hpp"

namespace helpers {

using mape::cplx;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// h(1/3) = log2(3) - 2/3, the single-qubit entropy of the W state.
inline const double kEntropyOneThird = 0.9182958340544896;

inline mape::PureState bell() {
    return mape::make_state(mape::DimsProfile({2, 2}), {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

// Computational basis state |digits>.
inline mape::PureState ket(const std::vector<int>& dims, const std::vector<int>& digits) {
    mape::DimsProfile profile(dims);
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    amps[static_cast<std::size_t>(mape::index_encode(profile, digits))] = 1.0;
    return mape::make_state(std::move(profile), std::move(amps));
}

inline mape::PureState plus() {
    return mape::make_state(mape::DimsProfile({2}), {kInvSqrt2, kInvSqrt2});
}

// Brute-force Kronecker product oracle.
inline std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out;
    out.reserve(a.size() * b.size());
    for (const cplx& x : a)
        for (const cplx& y : b) out.push_back(x * y);
    return out;
}

} // namespace helpers
