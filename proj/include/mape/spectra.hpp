// Spectral decomposition of coefficient matrices and the partial-trace
// oracle used to cross-check it.
//
// Two independent routes to the same reduced spectrum:
//   1. singular_values(coefficient_matrix(state, B)) — SVD of the reshape;
//   2. hermitian_eigenvalues(reduced_density_matrix(state, B)) — direct
//      partial trace over the complement, then a Hermitian eigensolve.
// The eigenvalues of route 2 must equal the squared singular values of
// route 1; the test suite enforces this equivalence.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mape/bipartition.hpp"
#include "mape/coefficient_matrix.hpp"
#include "mape/config.hpp"
#include "mape/errors.hpp"
#include "mape/state.hpp"

namespace mape {

struct SpectrumResult {
    std::vector<double> singular_values; // descending, above the rank cutoff
    int rank = 0;                        // = singular_values.size()
    double discarded_mass = 0.0;         // sum of squared discarded values

    double sum_squares() const {
        double s = 0.0;
        for (double v : singular_values) s += v * v;
        return s;
    }
};

inline SpectrumResult singular_values(const CoefficientMatrix& cm,
                                      const Config& cfg = default_config()) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm.entries);
    if (svd.info() != Eigen::Success)
        throw ConvergenceFailure("singular_values: SVD did not converge");
    const auto& sv = svd.singularValues();

    SpectrumResult result;
    if (sv.size() == 0 || sv(0) <= 0.0) return result;
    const double cutoff = cfg.rank_tol * sv(0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff)
            result.singular_values.push_back(sv(i));
        else
            result.discarded_mass += sv(i) * sv(i);
    }
    result.rank = static_cast<int>(result.singular_values.size());
    return result;
}

struct ReducedDensityMatrix {
    Bipartition rows;
    Eigen::MatrixXcd entries; // Hermitian PSD, trace 1
};

// Direct partial trace over the column parties:
//   rho(r, r') = sum_c a(r,c) * conj(a(r',c)).
// Deliberately does not touch CoefficientMatrix: flat indices are composed
// with index_encode from full digit strings, so this is the oracle side of
// the dual-route check.
inline ReducedDensityMatrix reduced_density_matrix(const PureState& state, const Bipartition& part,
                                                   const Config& cfg = default_config()) {
    const int n = state.n();
    if (part.n() != n)
        throw InvalidBipartition("reduced_density_matrix: bipartition party count does not match state");

    std::int64_t rows_dim = 1;
    for (int q : part.rows()) rows_dim *= state.profile().dim(q);
    if (rows_dim > cfg.max_reduced_dim)
        throw BudgetExceeded("reduced_density_matrix: reduced dimension " + std::to_string(rows_dim) +
                             " exceeds budget of " + std::to_string(cfg.max_reduced_dim));
    std::int64_t cols_dim = 1;
    for (int q : part.cols()) cols_dim *= state.profile().dim(q);

    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::vector<int> row_digits(part.rows().size(), 0);
    std::vector<int> col_digits(part.cols().size(), 0);

    auto advance = [](std::vector<int>& ds, const std::vector<int>& parties, const DimsProfile& p) {
        for (std::size_t k = ds.size(); k-- > 0;) {
            if (++ds[k] < p.dim(parties[k])) return true;
            ds[k] = 0;
        }
        return false;
    };

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(rows_dim, rows_dim);
    Eigen::VectorXcd column(rows_dim);
    // For each fixed column digit string, gather the amplitude vector over
    // the row digit strings and accumulate its outer product.
    do {
        for (std::size_t k = 0; k < col_digits.size(); ++k)
            digits[static_cast<std::size_t>(part.cols()[k]) - 1] = col_digits[k];
        std::fill(row_digits.begin(), row_digits.end(), 0);
        std::int64_t r = 0;
        do {
            for (std::size_t k = 0; k < row_digits.size(); ++k)
                digits[static_cast<std::size_t>(part.rows()[k]) - 1] = row_digits[k];
            column(r++) = state.amplitude(index_encode(state.profile(), digits));
        } while (advance(row_digits, part.rows(), state.profile()));
        rho.noalias() += column * column.adjoint();
    } while (advance(col_digits, part.cols(), state.profile()));

    return ReducedDensityMatrix{part, std::move(rho)};
}

// Real eigenvalues, descending. Tiny negative rounding (within the clamp
// window) is zeroed; anything more negative means the input was not a
// valid reduced density matrix.
inline std::vector<double> hermitian_eigenvalues(const ReducedDensityMatrix& rho,
                                                 const Config& cfg = default_config()) {
    const auto& m = rho.entries;
    const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (defect > cfg.hermiticity_tol)
        throw NumericalError("hermitian_eigenvalues: input not Hermitian (defect " +
                             std::to_string(defect) + ")");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("hermitian_eigenvalues: eigensolver did not converge");

    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(vals.begin(), vals.end(), std::greater<>());
    for (double& v : vals) {
        if (v < 0.0) {
            if (v < -cfg.eigenvalue_clamp)
                throw NumericalError("hermitian_eigenvalues: eigenvalue " + std::to_string(v) +
                                     " below the PSD clamp window");
            v = 0.0;
        }
    }
    return vals;
}

// Shannon entropy in bits over a probability list, 0 log 0 := 0.
inline double entropy_bits(std::span<const double> probabilities,
                           const Config& cfg = default_config()) {
    double e = 0.0;
    for (double p : probabilities)
        if (p >= cfg.entropy_zero) e -= p * std::log2(p);
    return e < 0.0 ? 0.0 : e;
}

// Von Neumann entropy from a coefficient-matrix spectrum:
//   E = -sum lambda_i^2 log2 lambda_i^2.
inline double entropy_from_spectrum(const SpectrumResult& spectrum,
                                    const Config& cfg = default_config()) {
    double sum = 0.0;
    for (double v : spectrum.singular_values) sum += v * v;
    if (std::abs(sum - 1.0) > cfg.spectrum_sum_tol)
        throw NotNormalizedSpectrum("entropy_from_spectrum: sum of squared singular values is " +
                                    std::to_string(sum));
    double e = 0.0;
    for (double v : spectrum.singular_values) {
        const double p = v * v;
        if (p >= cfg.entropy_zero) e -= p * std::log2(p);
    }
    return e < 0.0 ? 0.0 : e;
}

// Bipartite entanglement entropy via the SVD route.
inline double entropy_of(const PureState& state, const Bipartition& part,
                         const Config& cfg = default_config()) {
    return entropy_from_spectrum(singular_values(coefficient_matrix(state, part), cfg), cfg);
}

// Tr(rho^2); equals sum lambda_i^4 for the matching spectrum.
inline double purity(const ReducedDensityMatrix& rho) {
    return rho.entries.squaredNorm();
}

} // namespace mape
