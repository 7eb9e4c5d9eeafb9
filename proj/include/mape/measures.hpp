// Entanglement measures built from averaged partial entropies.
//
//   S_l  : geometric mean of the bipartite entropies E_B over all C(n,l)
//          size-l subsets B, computed in log space.
//   MEMS : the vector (S_1, ..., S_{floor(n/2)}).
//   MAPE : the l1 norm S_1 + ... + S_{floor(n/2)}.
//
// A state is genuinely multipartite entangled iff every coefficient
// matrix has rank > 1; is_genuinely_entangled tests all bipartitions and
// reports the first rank-1 subset as witness when the test fails.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mape/bipartition.hpp"
#include "mape/coefficient_matrix.hpp"
#include "mape/config.hpp"
#include "mape/detail/parallel.hpp"
#include "mape/errors.hpp"
#include "mape/spectra.hpp"
#include "mape/state.hpp"

namespace mape {

using MemsVector = std::vector<double>;

inline int mems_levels(int n) { return n / 2; }

// Spectra of every size-l coefficient matrix, in lexicographic subset
// order. Decompositions run in parallel; results land in fixed slots so
// the output does not depend on the thread count.
struct LevelSpectra {
    int level = 0;
    std::vector<Bipartition> subsets;
    std::vector<SpectrumResult> spectra;
};

inline LevelSpectra level_spectra(const PureState& state, int level,
                                  const Config& cfg = default_config()) {
    LevelSpectra scan;
    scan.level = level;
    scan.subsets = bipartitions_of_size(state.n(), level);
    scan.spectra.resize(scan.subsets.size());
    detail::parallel_for_index(scan.subsets.size(), cfg.threads, [&](std::size_t i) {
        scan.spectra[i] = singular_values(coefficient_matrix(state, scan.subsets[i]), cfg);
    });
    return scan;
}

// Geometric mean of the entropies, as exp2 of the mean log2. Any entropy
// below cfg.ape_zero zeroes the whole level: the product has a zero
// factor, which log space cannot represent.
inline double ape_from_spectra(const LevelSpectra& scan, const Config& cfg = default_config()) {
    double log_sum = 0.0;
    for (const SpectrumResult& sp : scan.spectra) {
        const double e = entropy_from_spectrum(sp, cfg);
        if (e < cfg.ape_zero) return 0.0;
        log_sum += std::log2(e);
    }
    return std::exp2(log_sum / static_cast<double>(scan.spectra.size()));
}

inline void require_multiparty(const PureState& state) {
    if (state.n() < 2)
        throw SinglePartyState("entanglement measures need at least two parties");
}

inline double ape(const PureState& state, int level, const Config& cfg = default_config()) {
    if (level < 1 || level > mems_levels(state.n()))
        throw LevelOutOfRange("ape: level " + std::to_string(level) + " outside [1, " +
                              std::to_string(mems_levels(state.n())) + "]");
    return ape_from_spectra(level_spectra(state, level, cfg), cfg);
}

inline MemsVector mems(const PureState& state, const Config& cfg = default_config()) {
    require_multiparty(state);
    MemsVector values;
    values.reserve(static_cast<std::size_t>(mems_levels(state.n())));
    for (int l = 1; l <= mems_levels(state.n()); ++l) values.push_back(ape(state, l, cfg));
    return values;
}

inline double mape_from_mems(const MemsVector& values) {
    double sum = 0.0;
    for (double s : values) sum += s;
    return sum;
}

inline double l2_ape_from_mems(const MemsVector& values) {
    double sum = 0.0;
    for (double s : values) sum += s * s;
    return std::sqrt(sum);
}

inline double mape(const PureState& state, const Config& cfg = default_config()) {
    return mape_from_mems(mems(state, cfg));
}

inline double l2_ape(const PureState& state, const Config& cfg = default_config()) {
    return l2_ape_from_mems(mems(state, cfg));
}

struct GenuineEntanglement {
    bool genuine = false;
    std::optional<Bipartition> witness; // first rank-1 bipartition when not genuine
};

inline GenuineEntanglement is_genuinely_entangled(const PureState& state,
                                                  const Config& cfg = default_config()) {
    require_multiparty(state);
    // All subset sizes 1..n-1, smallest first; ranks within a size are
    // computed in parallel, the witness scan stays in canonical order.
    for (int l = 1; l <= state.n() - 1; ++l) {
        auto subsets = bipartitions_of_size(state.n(), l);
        std::vector<int> ranks(subsets.size(), 0);
        detail::parallel_for_index(subsets.size(), cfg.threads, [&](std::size_t i) {
            ranks[i] = singular_values(coefficient_matrix(state, subsets[i]), cfg).rank;
        });
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if (ranks[i] <= 1) return GenuineEntanglement{false, subsets[i]};
    }
    return GenuineEntanglement{true, std::nullopt};
}

} // namespace mape
