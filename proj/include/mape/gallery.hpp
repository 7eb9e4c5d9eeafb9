// Named state families: Dicke |l1,n>, arbitrary-dimensional GHZ, qutrit
// D3 states, product states, seeded random states, and the canonical
// two-term Schmidt family c0|0...0> + c1|1...1>.
//
// Dicke and D3 amplitudes are built by scanning all basis strings and
// testing the digit multiset, O(total_dim) per state, which sidesteps
// duplicate handling in permutation generation.

#pragma once

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mape/config.hpp"
#include "mape/detail/rng.hpp"
#include "mape/errors.hpp"
#include "mape/state.hpp"

namespace mape {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// Symmetric superposition of all n-qubit strings with l1 excitations,
// amplitude 1/sqrt(C(n,l1)) each.
inline PureState dicke(int n, int l1, const Config& cfg = default_config()) {
    if (n < 1) throw InvalidExcitationCount("dicke: need at least one qubit");
    if (l1 < 0 || l1 > n)
        throw InvalidExcitationCount("dicke: excitation count " + std::to_string(l1) +
                                     " outside [0, " + std::to_string(n) + "]");
    DimsProfile profile(std::vector<int>(static_cast<std::size_t>(n), 2), cfg);
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, l1)));
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    for (std::int64_t i = 0; i < profile.total_dim(); ++i)
        if (std::popcount(static_cast<std::uint64_t>(i)) == l1)
            amps[static_cast<std::size_t>(i)] = amp;
    return make_state(std::move(profile), std::move(amps), true, cfg);
}

// (1/sqrt(d)) sum_i |i i ... i> on n parties of local dimension d.
inline PureState ghz(int n, int d, const Config& cfg = default_config()) {
    if (n < 2) throw Error("ghz: need at least two parties");
    if (d < 2) throw Error("ghz: local dimension must be >= 2");
    DimsProfile profile(std::vector<int>(static_cast<std::size_t>(n), d), cfg);
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = 0; i < d; ++i) {
        std::fill(digits.begin(), digits.end(), i);
        amps[static_cast<std::size_t>(index_encode(profile, digits))] = amp;
    }
    return make_state(std::move(profile), std::move(amps), true, cfg);
}

// Symmetric qutrit superposition with l1 ones, l2 twos, l0 = n - l1 - l2
// zeros; amplitude (n! / (l0! l1! l2!))^(-1/2) on every arrangement.
inline PureState d3(int n, int l1, int l2, const Config& cfg = default_config()) {
    if (n < 1) throw InvalidExcitationCount("d3: need at least one qutrit");
    if (l1 < 0 || l2 < 0 || l1 + l2 > n)
        throw InvalidExcitationCount("d3: excitation counts (" + std::to_string(l1) + "," +
                                     std::to_string(l2) + ") infeasible for n=" + std::to_string(n));
    DimsProfile profile(std::vector<int>(static_cast<std::size_t>(n), 3), cfg);
    const std::int64_t multinomial = binomial(n, l1) * binomial(n - l1, l2);
    const double amp = 1.0 / std::sqrt(static_cast<double>(multinomial));
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    for (std::int64_t i = 0; i < profile.total_dim(); ++i) {
        int ones = 0, twos = 0;
        for (std::int64_t rest = i; rest > 0; rest /= 3) {
            const int digit = static_cast<int>(rest % 3);
            ones += digit == 1;
            twos += digit == 2;
        }
        if (ones == l1 && twos == l2) amps[static_cast<std::size_t>(i)] = amp;
    }
    return make_state(std::move(profile), std::move(amps), true, cfg);
}

// Iterated tensor product of single-party states; MAPE is 0 by Theorem 2.
inline PureState product_state(const std::vector<PureState>& factors,
                               const Config& cfg = default_config()) {
    if (factors.empty()) throw Error("product_state: need at least one factor");
    for (const PureState& f : factors)
        if (f.n() != 1)
            throw DimensionMismatch("product_state: every factor must be a single-party state");
    PureState out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor_product(out, factors[i], cfg);
    return out;
}

// Amplitudes with independent standard complex Gaussian components from
// mt19937_64(seed) + Box-Muller, then normalized. Same seed, same state.
inline PureState random_state(DimsProfile profile, std::uint64_t seed,
                              const Config& cfg = default_config()) {
    detail::GaussianSource gauss(seed);
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    for (cplx& a : amps) {
        const double re = gauss();
        const double im = gauss();
        a = cplx{re, im};
    }
    return make_state(std::move(profile), std::move(amps), true, cfg);
}

inline PureState random_state(const std::vector<int>& dims, std::uint64_t seed,
                              const Config& cfg = default_config()) {
    return random_state(DimsProfile(dims, cfg), seed, cfg);
}

// c0|0...0> + c1|1...1> on n qubits: the canonical Schmidt-decomposable
// family (local unitaries preserve all singular values, so it represents
// the class).
inline PureState schmidt_state(int n, cplx c0, cplx c1, const Config& cfg = default_config()) {
    if (n < 2) throw Error("schmidt_state: need at least two qubits");
    const double weight = std::norm(c0) + std::norm(c1);
    if (std::abs(weight - 1.0) > cfg.norm_tol)
        throw NotNormalized("schmidt_state: |c0|^2 + |c1|^2 = " + std::to_string(weight));
    DimsProfile profile(std::vector<int>(static_cast<std::size_t>(n), 2), cfg);
    std::vector<cplx> amps(static_cast<std::size_t>(profile.total_dim()));
    amps.front() = c0;
    amps.back() = c1;
    return make_state(std::move(profile), std::move(amps), false, cfg);
}

// ---------------------------------------------------------------------
// Gallery addressing grammar: "family:key=value,key=value", e.g.
//   dicke:n=6,l1=3   ghz:n=4,d=3   d3:n=9,l1=3,l2=3
//   schmidt:n=5,p=0.9   random:dims=2x2x2,seed=42

namespace detail {

struct KeyValues {
    std::vector<std::pair<std::string, std::string>> items;

    std::string_view require(const std::string& key) const {
        for (const auto& [k, v] : items)
            if (k == key) return v;
        throw ParseError("state spec: missing key '" + key + "'");
    }

    std::string_view get_or(const std::string& key, std::string_view fallback) const {
        for (const auto& [k, v] : items)
            if (k == key) return v;
        return fallback;
    }

    void allow_only(std::initializer_list<std::string_view> keys) const {
        for (const auto& [k, v] : items) {
            bool known = false;
            for (std::string_view allowed : keys) known = known || k == allowed;
            if (!known) throw ParseError("state spec: unknown key '" + k + "'");
        }
    }
};

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
    T value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("state spec: cannot parse " + what + " from '" + std::string(text) + "'");
    return value;
}

inline std::vector<int> parse_dims_list(std::string_view text) {
    std::vector<int> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t stop = std::min(text.find('x', start), text.size());
        dims.push_back(parse_number<int>(text.substr(start, stop - start), "dimension"));
        if (stop == text.size()) break;
        start = stop + 1;
    }
    return dims;
}

} // namespace detail

// Parses the gallery addressing grammar and constructs the state.
inline PureState parse_state_spec(std::string_view spec, const Config& cfg = default_config()) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw ParseError("state spec: expected 'family:key=value,...', got '" + std::string(spec) + "'");
    const std::string family(spec.substr(0, colon));

    detail::KeyValues kv;
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = std::min(rest.find(','), rest.size());
        const std::string_view item = rest.substr(0, comma);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 >= item.size())
            throw ParseError("state spec: expected key=value, got '" + std::string(item) + "'");
        kv.items.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        rest = comma == rest.size() ? std::string_view{} : rest.substr(comma + 1);
    }

    if (family == "dicke") {
        kv.allow_only({"n", "l1"});
        return dicke(detail::parse_number<int>(kv.require("n"), "n"),
                     detail::parse_number<int>(kv.require("l1"), "l1"), cfg);
    }
    if (family == "ghz") {
        kv.allow_only({"n", "d"});
        return ghz(detail::parse_number<int>(kv.require("n"), "n"),
                   detail::parse_number<int>(kv.require("d"), "d"), cfg);
    }
    if (family == "d3") {
        kv.allow_only({"n", "l1", "l2"});
        return d3(detail::parse_number<int>(kv.require("n"), "n"),
                  detail::parse_number<int>(kv.require("l1"), "l1"),
                  detail::parse_number<int>(kv.require("l2"), "l2"), cfg);
    }
    if (family == "schmidt") {
        kv.allow_only({"n", "p"});
        const double p = detail::parse_number<double>(kv.require("p"), "p");
        if (p < 0.0 || p > 1.0) throw ParseError("state spec: schmidt weight p must be in [0,1]");
        return schmidt_state(detail::parse_number<int>(kv.require("n"), "n"), std::sqrt(p),
                             std::sqrt(1.0 - p), cfg);
    }
    if (family == "random") {
        kv.allow_only({"dims", "seed"});
        const auto dims = detail::parse_dims_list(kv.require("dims"));
        const auto seed = detail::parse_number<std::uint64_t>(kv.get_or("seed", "0"), "seed");
        return random_state(dims, seed, cfg);
    }
    throw ParseError("state spec: unknown family '" + family + "'");
}

} // namespace mape
