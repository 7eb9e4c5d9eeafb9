// Bipartitions of the party set {1..n}: a sorted subset (the "rows" of a
// coefficient matrix) and its complement (the "columns"). Subsets are
// canonical: unordered, stored ascending. Enumeration is lexicographic so
// every scan over bipartitions is deterministic.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mape/errors.hpp"

namespace mape {

class Bipartition {
  public:
    Bipartition(int n_parties, std::vector<int> rows) : n_(n_parties), rows_(std::move(rows)) {
        if (n_ < 2) throw InvalidBipartition("Bipartition: need at least two parties");
        const int l = static_cast<int>(rows_.size());
        if (l < 1 || l > n_ - 1)
            throw InvalidBipartition("Bipartition: subset size must be in [1, n-1]");
        if (!std::is_sorted(rows_.begin(), rows_.end()))
            throw InvalidBipartition("Bipartition: row parties must be sorted ascending");
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        for (int q : rows_) {
            if (q < 1 || q > n_) throw InvalidBipartition("Bipartition: party index out of range");
            if (used[static_cast<std::size_t>(q) - 1])
                throw InvalidBipartition("Bipartition: duplicate party index");
            used[static_cast<std::size_t>(q) - 1] = true;
        }
        cols_.reserve(static_cast<std::size_t>(n_ - l));
        for (int q = 1; q <= n_; ++q)
            if (!used[static_cast<std::size_t>(q) - 1]) cols_.push_back(q);
    }

    int n() const { return n_; }
    int level() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    bool contains(int party) const {
        return std::binary_search(rows_.begin(), rows_.end(), party);
    }

    Bipartition complement() const { return Bipartition(n_, cols_); }

    bool operator==(const Bipartition& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + "}";
    }

  private:
    int n_;
    std::vector<int> rows_;
    std::vector<int> cols_;
};

// All C(n,l) size-l subsets of {1..n} in lexicographic order.
inline std::vector<Bipartition> bipartitions_of_size(int n, int l) {
    if (n < 2) throw InvalidBipartition("bipartitions_of_size: need at least two parties");
    if (l < 1 || l > n - 1)
        throw InvalidBipartition("bipartitions_of_size: subset size must be in [1, n-1]");
    std::vector<Bipartition> out;
    std::vector<int> subset(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(n, subset);
        // next combination
        int i = l - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - l + i + 1) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < l; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Sizes 1..n-1, lexicographic within each size.
inline std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int l = 1; l <= n - 1; ++l) {
        auto level = bipartitions_of_size(n, l);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace mape
