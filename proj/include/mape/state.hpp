// Multipartite pure states over a mixed-radix index lattice.
//
// Index convention (used everywhere in this library): a flat amplitude
// index i corresponds to the digit string s_1 s_2 ... s_n with party 1 the
// MOST significant digit,
//
//     i = ((s_1 * d_2 + s_2) * d_3 + s_3) * ...
//
// so for qubits the flat index read in binary is the basis label. Parties
// are numbered 1..n.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mape/config.hpp"
#include "mape/errors.hpp"

namespace mape {

using cplx = std::complex<double>;

class DimsProfile {
  public:
    explicit DimsProfile(std::vector<int> dims, const Config& cfg = default_config())
        : dims_(std::move(dims)) {
        if (dims_.empty()) throw Error("DimsProfile: need at least one party");
        total_dim_ = 1;
        for (int d : dims_) {
            if (d < 2) throw Error("DimsProfile: local dimension must be >= 2, got " + std::to_string(d));
            if (total_dim_ > cfg.max_total_dim / d)
                throw BudgetExceeded("DimsProfile: total dimension exceeds budget of " +
                                     std::to_string(cfg.max_total_dim));
            total_dim_ *= d;
        }
    }

    int n() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    std::int64_t total_dim() const { return total_dim_; }

    // party is 1-based
    int dim(int party) const { return dims_[static_cast<std::size_t>(party) - 1]; }

    bool operator==(const DimsProfile& other) const { return dims_ == other.dims_; }

  private:
    std::vector<int> dims_;
    std::int64_t total_dim_;
};

// digits -> flat index, party 1 most significant.
inline std::int64_t index_encode(const DimsProfile& profile, std::span<const int> digits) {
    if (static_cast<int>(digits.size()) != profile.n())
        throw LengthMismatch("index_encode: digit count does not match party count");
    std::int64_t index = 0;
    for (int k = 0; k < profile.n(); ++k) {
        const int d = profile.dims()[static_cast<std::size_t>(k)];
        const int s = digits[static_cast<std::size_t>(k)];
        if (s < 0 || s >= d)
            throw DigitOutOfRange("index_encode: digit " + std::to_string(s) + " out of range for dimension " +
                                  std::to_string(d));
        index = index * d + s;
    }
    return index;
}

inline void index_decode_into(const DimsProfile& profile, std::int64_t index, std::span<int> digits) {
    if (index < 0 || index >= profile.total_dim())
        throw IndexOutOfRange("index_decode: index " + std::to_string(index) + " out of range");
    for (int k = profile.n() - 1; k >= 0; --k) {
        const int d = profile.dims()[static_cast<std::size_t>(k)];
        digits[static_cast<std::size_t>(k)] = static_cast<int>(index % d);
        index /= d;
    }
}

inline std::vector<int> index_decode(const DimsProfile& profile, std::int64_t index) {
    std::vector<int> digits(static_cast<std::size_t>(profile.n()));
    index_decode_into(profile, index, digits);
    return digits;
}

class PureState {
  public:
    const DimsProfile& profile() const { return profile_; }
    int n() const { return profile_.n(); }
    std::int64_t dim() const { return profile_.total_dim(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::int64_t i) const { return amps_[static_cast<std::size_t>(i)]; }

    double norm() const {
        long double sum = 0.0L;
        for (const cplx& a : amps_) sum += std::norm(a);
        return static_cast<double>(std::sqrt(sum));
    }

    friend PureState make_state(DimsProfile, std::vector<cplx>, bool, const Config&);

  private:
    PureState(DimsProfile profile, std::vector<cplx> amps)
        : profile_(std::move(profile)), amps_(std::move(amps)) {}

    DimsProfile profile_;
    std::vector<cplx> amps_;
};

inline PureState make_state(DimsProfile profile, std::vector<cplx> amplitudes, bool normalize = false,
                            const Config& cfg = default_config()) {
    if (static_cast<std::int64_t>(amplitudes.size()) != profile.total_dim())
        throw LengthMismatch("make_state: expected " + std::to_string(profile.total_dim()) +
                             " amplitudes, got " + std::to_string(amplitudes.size()));

    long double sum = 0.0L;
    for (const cplx& a : amplitudes) sum += std::norm(a);
    const double norm = static_cast<double>(std::sqrt(sum));
    if (norm < 1e-300) throw ZeroVector("make_state: amplitude vector is numerically zero");

    if (normalize) {
        const double inv = 1.0 / norm;
        for (cplx& a : amplitudes) a *= inv;
    } else if (std::abs(norm - 1.0) > cfg.norm_tol) {
        throw NotNormalized("make_state: norm is " + std::to_string(norm) +
                            "; pass normalize=true to rescale");
    }
    return PureState(std::move(profile), std::move(amplitudes));
}

// a_{(i,j)} = a1_i * a2_j under the concatenated profile; with party 1 most
// significant the left factor occupies the high digits.
inline PureState tensor_product(const PureState& s1, const PureState& s2,
                                const Config& cfg = default_config()) {
    std::vector<int> dims = s1.profile().dims();
    dims.insert(dims.end(), s2.profile().dims().begin(), s2.profile().dims().end());
    DimsProfile profile(std::move(dims), cfg); // throws BudgetExceeded

    const std::int64_t d2 = s2.dim();
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    for (std::int64_t i = 0; i < s1.dim(); ++i) {
        const cplx a1 = s1.amplitude(i);
        for (std::int64_t j = 0; j < d2; ++j)
            amps[static_cast<std::size_t>(i * d2 + j)] = a1 * s2.amplitude(j);
    }
    return make_state(std::move(profile), std::move(amps), true, cfg);
}

// Output position j carries the digit of input party perm[j-1]:
// out(s_{perm(1)}, ..., s_{perm(n)}) = in(s_1, ..., s_n). The output dims
// profile is permuted consistently. Amplitudes are copied exactly.
inline PureState permute_parties(const PureState& state, std::span<const int> perm,
                                 const Config& cfg = default_config()) {
    const int n = state.n();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidPermutation("permute_parties: permutation length does not match party count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p) - 1])
            throw InvalidPermutation("permute_parties: not a permutation of 1..n");
        seen[static_cast<std::size_t>(p) - 1] = true;
    }

    std::vector<int> out_dims(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out_dims[static_cast<std::size_t>(j)] = state.profile().dim(perm[static_cast<std::size_t>(j)]);
    DimsProfile out_profile(std::move(out_dims), cfg);

    std::vector<cplx> out_amps(static_cast<std::size_t>(state.dim()));
    std::vector<int> in_digits(static_cast<std::size_t>(n));
    std::vector<int> out_digits(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        index_decode_into(state.profile(), i, in_digits);
        for (int j = 0; j < n; ++j)
            out_digits[static_cast<std::size_t>(j)] = in_digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]) - 1];
        out_amps[static_cast<std::size_t>(index_encode(out_profile, out_digits))] = state.amplitude(i);
    }
    return make_state(std::move(out_profile), std::move(out_amps), false, cfg);
}

inline cplx inner_product(const PureState& a, const PureState& b) {
    if (!(a.profile() == b.profile()))
        throw DimensionMismatch("inner_product: profiles differ");
    cplx sum{0.0, 0.0};
    for (std::int64_t i = 0; i < a.dim(); ++i) sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    return sum;
}

} // namespace mape
