// Coefficient matrix of a pure state for one bipartition: the reshape of
// the amplitude vector with row index running over the row parties' digits
// and column index over the complement's, both lexicographic. A pure
// data movement; no arithmetic on the values.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdint>
#include <vector>

#include "mape/bipartition.hpp"
#include "mape/config.hpp"
#include "mape/errors.hpp"
#include "mape/state.hpp"

namespace mape {

struct CoefficientMatrix {
    Bipartition bipartition;
    Eigen::MatrixXcd entries; // rows_dim x cols_dim

    std::int64_t rows_dim() const { return entries.rows(); }
    std::int64_t cols_dim() const { return entries.cols(); }
};

inline CoefficientMatrix coefficient_matrix(const PureState& state, const Bipartition& part) {
    const int n = state.n();
    if (part.n() != n)
        throw InvalidBipartition("coefficient_matrix: bipartition party count does not match state");

    // Per-party strides: flat-index stride, and the stride each party's
    // digit contributes to the row (or column) index of the reshape.
    std::vector<std::int64_t> flat_stride(static_cast<std::size_t>(n));
    std::int64_t acc = 1;
    for (int k = n; k >= 1; --k) {
        flat_stride[static_cast<std::size_t>(k) - 1] = acc;
        acc *= state.profile().dim(k);
    }

    std::vector<std::int64_t> side_stride(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_row(static_cast<std::size_t>(n), false);
    std::int64_t rows_dim = 1;
    for (auto it = part.rows().rbegin(); it != part.rows().rend(); ++it) {
        side_stride[static_cast<std::size_t>(*it) - 1] = rows_dim;
        is_row[static_cast<std::size_t>(*it) - 1] = true;
        rows_dim *= state.profile().dim(*it);
    }
    std::int64_t cols_dim = 1;
    for (auto it = part.cols().rbegin(); it != part.cols().rend(); ++it) {
        side_stride[static_cast<std::size_t>(*it) - 1] = cols_dim;
        cols_dim *= state.profile().dim(*it);
    }

    Eigen::MatrixXcd m(rows_dim, cols_dim);
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        std::int64_t r = 0, c = 0;
        for (int k = 1; k <= n; ++k) {
            const std::size_t kk = static_cast<std::size_t>(k) - 1;
            const std::int64_t digit = (i / flat_stride[kk]) % state.profile().dim(k);
            if (is_row[kk])
                r += digit * side_stride[kk];
            else
                c += digit * side_stride[kk];
        }
        m(r, c) = state.amplitude(i);
    }
    return CoefficientMatrix{part, std::move(m)};
}

// Numerical rank: singular values above rel_tol * sigma_max. An all-zero
// matrix has rank 0 (unreachable for normalized states).
inline int rank(const CoefficientMatrix& cm, double rel_tol = default_config().rank_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm.entries);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double cutoff = rel_tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return r;
}

} // namespace mape
