// Central tolerance and budget record. Every numerical threshold used by
// the library lives here so tolerances stay consistent across modules.

#pragma once

#include <cstdint>

namespace mape {

struct Config {
    // State construction: |  ||a||_2 - 1  | must stay below this unless the
    // caller asks for renormalization.
    double norm_tol = 1e-12;

    // Relative singular-value cutoff: sigma_i counts toward the rank iff
    // sigma_i > rank_tol * sigma_max. The gallery states have exact rational
    // spectra, so 1e-10 cleanly separates true zeros from rounding noise.
    double rank_tol = 1e-10;

    // sum lambda_i^2 must equal 1 within this before an entropy is taken.
    double spectrum_sum_tol = 1e-9;

    // Frobenius-norm / completeness / probability-sum checks.
    double matrix_tol = 1e-10;

    // max |rho - rho^dagger| entry for the Hermitian eigensolver input.
    double hermiticity_tol = 1e-12;

    // Eigenvalues in (-eigenvalue_clamp, 0) are rounding noise and clamp
    // to zero; anything more negative is a genuine failure.
    double eigenvalue_clamp = 1e-12;

    // lambda^2 below this contributes 0 to the entropy (0 log 0 := 0).
    double entropy_zero = 1e-15;

    // Any bipartite entropy below this forces the whole level average S_l
    // to zero: a product with a zero factor is zero, and the log-space
    // geometric mean cannot represent it.
    double ape_zero = 1e-12;

    // LOCC outcomes with probability below this are dropped (their mass is
    // reported) instead of normalizing a near-zero vector.
    double outcome_floor = 1e-14;

    // Absolute slack on the monotonicity inequality avg_after <= before.
    double violation_tol = 1e-9;

    // State-size budget: total_dim = prod d_k may not exceed this.
    std::int64_t max_total_dim = std::int64_t{1} << 20;

    // Largest reduced density matrix the partial-trace oracle will build.
    std::int64_t max_reduced_dim = 2048;

    // Worker threads for per-bipartition scans; 0 = hardware concurrency.
    unsigned threads = 0;
};

inline const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

} // namespace mape
