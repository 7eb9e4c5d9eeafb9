#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "mape/bipartition.hpp"
#include "mape/coefficient_matrix.hpp"
#include "mape/gallery.hpp"
#include "mape/spectra.hpp"

using Catch::Matchers::WithinAbs;
using helpers::kInvSqrt2;
using mape::Bipartition;
using mape::cplx;

TEST_CASE("bipartition validation and complement", "[coeff]") {
    const Bipartition b(4, {1, 3});
    REQUIRE(b.level() == 2);
    REQUIRE(b.cols() == std::vector<int>{2, 4});
    REQUIRE(b.complement().rows() == std::vector<int>{2, 4});
    REQUIRE(b.contains(3));
    REQUIRE(!b.contains(2));

    REQUIRE_THROWS_AS(Bipartition(4, {}), mape::InvalidBipartition);
    REQUIRE_THROWS_AS(Bipartition(4, {1, 2, 3, 4}), mape::InvalidBipartition);
    REQUIRE_THROWS_AS(Bipartition(4, {2, 2}), mape::InvalidBipartition);
    REQUIRE_THROWS_AS(Bipartition(4, {0, 1}), mape::InvalidBipartition);
    REQUIRE_THROWS_AS(Bipartition(4, {3, 1}), mape::InvalidBipartition);
}

TEST_CASE("bipartition enumeration is lexicographic", "[coeff]") {
    const auto subsets = mape::bipartitions_of_size(4, 2);
    REQUIRE(subsets.size() == 6);
    REQUIRE(subsets.front().rows() == std::vector<int>{1, 2});
    REQUIRE(subsets[1].rows() == std::vector<int>{1, 3});
    REQUIRE(subsets.back().rows() == std::vector<int>{3, 4});

    const auto all = mape::all_bipartitions(3);
    REQUIRE(all.size() == 6); // 2^3 - 2
    REQUIRE(all.front().rows() == std::vector<int>{1});
    REQUIRE(all.back().rows() == std::vector<int>{2, 3});
}

TEST_CASE("coefficient matrix of the Bell state", "[coeff]") {
    const auto cm = mape::coefficient_matrix(helpers::bell(), Bipartition(2, {1}));
    REQUIRE(cm.rows_dim() == 2);
    REQUIRE(cm.cols_dim() == 2);
    REQUIRE_THAT(cm.entries(0, 0).real(), WithinAbs(kInvSqrt2, 1e-15));
    REQUIRE_THAT(cm.entries(1, 1).real(), WithinAbs(kInvSqrt2, 1e-15));
    REQUIRE_THAT(std::abs(cm.entries(0, 1)), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(std::abs(cm.entries(1, 0)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("coefficient matrix of a product basis state", "[coeff]") {
    const auto cm = mape::coefficient_matrix(helpers::ket({2, 2}, {0, 0}), Bipartition(2, {1}));
    REQUIRE_THAT(cm.entries(0, 0).real(), WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(std::abs(cm.entries(0, 1)) + std::abs(cm.entries(1, 0)) + std::abs(cm.entries(1, 1)),
                 WithinAbs(0.0, 1e-15));
}

TEST_CASE("coefficient matrix interleaving for GHZ rows {1,2}", "[coeff]") {
    // Hand oracle: the only nonzero amplitudes are |000> and |111>; with
    // rows {1,2} they land at (r,c) = (0,0) and (3,1).
    const auto cm = mape::coefficient_matrix(mape::ghz(3, 2), Bipartition(3, {1, 2}));
    REQUIRE(cm.rows_dim() == 4);
    REQUIRE(cm.cols_dim() == 2);
    REQUIRE_THAT(cm.entries(0, 0).real(), WithinAbs(kInvSqrt2, 1e-14));
    REQUIRE_THAT(cm.entries(3, 1).real(), WithinAbs(kInvSqrt2, 1e-14));
    double off_mass = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 2; ++c)
            if (!((r == 0 && c == 0) || (r == 3 && c == 1))) off_mass += std::abs(cm.entries(r, c));
    REQUIRE_THAT(off_mass, WithinAbs(0.0, 1e-15));
}

TEST_CASE("coefficient matrix entries agree with a digit-remap oracle", "[coeff]") {
    const auto state = mape::random_state({2, 3, 2}, 31);
    const Bipartition part(3, {2});
    const auto cm = mape::coefficient_matrix(state, part);
    REQUIRE(cm.rows_dim() == 3);
    REQUIRE(cm.cols_dim() == 4);
    // Oracle: decode every flat index and place the amplitude by hand.
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        const auto digits = mape::index_decode(state.profile(), i);
        const int r = digits[1];
        const int c = digits[0] * 2 + digits[2];
        REQUIRE(cm.entries(r, c) == state.amplitude(i));
    }
}

TEST_CASE("reshape bijectivity: entries are the amplitudes as a multiset", "[coeff]") {
    const auto state = mape::random_state({2, 3, 2, 2}, 47);
    auto sorted_amps = state.amplitudes();
    auto key = [](const cplx& a, const cplx& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    std::sort(sorted_amps.begin(), sorted_amps.end(), key);
    for (const auto& part : mape::all_bipartitions(state.n())) {
        const auto cm = mape::coefficient_matrix(state, part);
        std::vector<cplx> entries;
        entries.reserve(static_cast<std::size_t>(state.dim()));
        for (std::int64_t r = 0; r < cm.rows_dim(); ++r)
            for (std::int64_t c = 0; c < cm.cols_dim(); ++c) entries.push_back(cm.entries(r, c));
        std::sort(entries.begin(), entries.end(), key);
        REQUIRE(entries == sorted_amps); // exact equality of values
    }
}

TEST_CASE("complementary bipartitions share their nonzero spectrum", "[coeff]") {
    const auto state = mape::random_state({2, 2, 3, 2}, 53);
    for (const auto& part : mape::bipartitions_of_size(state.n(), 2)) {
        const auto sp_rows = mape::singular_values(mape::coefficient_matrix(state, part));
        const auto sp_cols = mape::singular_values(mape::coefficient_matrix(state, part.complement()));
        REQUIRE(sp_rows.rank == sp_cols.rank);
        for (int i = 0; i < sp_rows.rank; ++i)
            REQUIRE_THAT(sp_rows.singular_values[static_cast<std::size_t>(i)],
                         WithinAbs(sp_cols.singular_values[static_cast<std::size_t>(i)], 1e-10));
    }
}

TEST_CASE("unit Frobenius norm for every bipartition", "[coeff]") {
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        const auto state = mape::random_state({3, 2, 2, 3}, seed);
        for (const auto& part : mape::all_bipartitions(state.n()))
            REQUIRE_THAT(mape::coefficient_matrix(state, part).entries.norm(),
                         WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("rank of product, GHZ, and Dicke states", "[coeff]") {
    const auto product = mape::product_state(
        {mape::random_state({2}, 3), mape::random_state({3}, 4), mape::random_state({2}, 5)});
    for (const auto& part : mape::all_bipartitions(3))
        REQUIRE(mape::rank(mape::coefficient_matrix(product, part)) == 1);

    for (int d : {2, 3, 4}) {
        const auto state = mape::ghz(3, d);
        for (const auto& part : mape::all_bipartitions(3))
            REQUIRE(mape::rank(mape::coefficient_matrix(state, part)) == d);
    }

    // n-qubit Dicke states: the rank of a 2-party coefficient matrix of
    // dicke(4,k) is min(k,2,4-k)+1.
    REQUIRE(mape::rank(mape::coefficient_matrix(mape::dicke(4, 1), Bipartition(4, {1, 2}))) == 2);
    REQUIRE(mape::rank(mape::coefficient_matrix(mape::dicke(4, 2), Bipartition(4, {2, 4}))) == 3);
}

TEST_CASE("coefficient matrix rejects mismatched bipartitions", "[coeff]") {
    REQUIRE_THROWS_AS(mape::coefficient_matrix(helpers::bell(), Bipartition(3, {1})),
                      mape::InvalidBipartition);
}
