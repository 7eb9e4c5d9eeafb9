#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "mape/bipartition.hpp"
#include "mape/coefficient_matrix.hpp"
#include "mape/gallery.hpp"
#include "mape/measures.hpp"
#include "mape/spectra.hpp"

using Catch::Matchers::WithinAbs;
using mape::Bipartition;
using mape::cplx;

TEST_CASE("dicke states enumerate the right basis strings", "[gallery]") {
    const auto ground = mape::dicke(3, 0);
    REQUIRE_THAT(std::abs(ground.amplitude(0)), WithinAbs(1.0, 1e-15));

    const auto w = mape::dicke(3, 1);
    const double amp = 1.0 / std::sqrt(3.0);
    for (std::int64_t i : {1, 2, 4}) REQUIRE_THAT(w.amplitude(i).real(), WithinAbs(amp, 1e-14));
    for (std::int64_t i : {0, 3, 5, 6, 7}) REQUIRE_THAT(std::abs(w.amplitude(i)), WithinAbs(0.0, 1e-15));

    const auto half = mape::dicke(4, 2);
    int support = 0;
    for (std::int64_t i = 0; i < half.dim(); ++i)
        if (std::abs(half.amplitude(i)) > 0.0) {
            ++support;
            REQUIRE_THAT(half.amplitude(i).real(), WithinAbs(1.0 / std::sqrt(6.0), 1e-14));
        }
    REQUIRE(support == 6); // C(4,2)
}

TEST_CASE("ghz states put weight 1/sqrt(d) on the diagonal strings", "[gallery]") {
    const auto bell_like = mape::ghz(2, 2);
    REQUIRE(bell_like.amplitudes().size() == helpers::bell().amplitudes().size());
    for (std::int64_t i = 0; i < 4; ++i)
        REQUIRE_THAT(std::abs(bell_like.amplitude(i) - helpers::bell().amplitude(i)),
                     WithinAbs(0.0, 1e-14));

    const auto qutrit = mape::ghz(3, 3);
    const double amp = 1.0 / std::sqrt(3.0);
    for (std::int64_t i : {0, 13, 26}) REQUIRE_THAT(qutrit.amplitude(i).real(), WithinAbs(amp, 1e-14));
    REQUIRE_THAT(qutrit.norm(), WithinAbs(1.0, 1e-12));

    // every bipartition of ghz(4,2) has exactly two singular values 1/sqrt(2)
    const auto state = mape::ghz(4, 2);
    for (const auto& part : mape::all_bipartitions(4)) {
        const auto sp = mape::singular_values(mape::coefficient_matrix(state, part));
        REQUIRE(sp.rank == 2);
        REQUIRE_THAT(sp.singular_values[0], WithinAbs(helpers::kInvSqrt2, 1e-12));
        REQUIRE_THAT(sp.singular_values[1], WithinAbs(helpers::kInvSqrt2, 1e-12));
    }
}

TEST_CASE("d3 states enumerate digit multisets", "[gallery]") {
    const auto two = mape::d3(2, 1, 1); // (|12> + |21>)/sqrt(2)
    for (std::int64_t i : {5, 7}) REQUIRE_THAT(two.amplitude(i).real(), WithinAbs(helpers::kInvSqrt2, 1e-14));
    REQUIRE_THAT(two.norm(), WithinAbs(1.0, 1e-12));

    const auto three = mape::d3(3, 1, 1); // six permutations of (0,1,2)
    const double amp = 1.0 / std::sqrt(6.0);
    const std::set<std::int64_t> expected = {5, 7, 11, 15, 19, 21};
    for (std::int64_t i = 0; i < three.dim(); ++i) {
        if (expected.count(i))
            REQUIRE_THAT(three.amplitude(i).real(), WithinAbs(amp, 1e-14));
        else
            REQUIRE_THAT(std::abs(three.amplitude(i)), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("dicke and d3 states are permutation symmetric", "[gallery]") {
    const auto d = mape::dicke(5, 2);
    REQUIRE(mape::permute_parties(d, std::vector<int>{3, 5, 1, 2, 4}).amplitudes() == d.amplitudes());
    const auto q = mape::d3(4, 2, 1);
    REQUIRE(mape::permute_parties(q, std::vector<int>{4, 1, 3, 2}).amplitudes() == q.amplitudes());
}

TEST_CASE("dicke excitation symmetry l1 <-> n - l1", "[gallery]") {
    for (int l1 = 0; l1 <= 2; ++l1)
        REQUIRE_THAT(mape::mape(mape::dicke(5, l1)), WithinAbs(mape::mape(mape::dicke(5, 5 - l1)), 1e-9));
}

TEST_CASE("product states have rank-1 coefficient matrices everywhere", "[gallery]") {
    const auto product = mape::product_state(
        {mape::random_state({3}, 71), mape::random_state({3}, 72), mape::random_state({3}, 73)});
    for (const auto& part : mape::all_bipartitions(3))
        REQUIRE(mape::rank(mape::coefficient_matrix(product, part)) == 1);
    REQUIRE_THAT(mape::mape(product), WithinAbs(0.0, 1e-9));

    const auto plus_plus = mape::product_state({helpers::plus(), helpers::plus()});
    for (std::int64_t i = 0; i < 4; ++i)
        REQUIRE_THAT(plus_plus.amplitude(i).real(), WithinAbs(0.5, 1e-14));
}

TEST_CASE("product_state rejects multi-party factors", "[gallery]") {
    REQUIRE_THROWS_AS(mape::product_state({helpers::bell()}), mape::DimensionMismatch);
    REQUIRE_THROWS_AS(mape::product_state({}), mape::Error);
}

TEST_CASE("random states are seeded and normalized", "[gallery]") {
    const auto a = mape::random_state({2, 2, 2}, 42);
    const auto b = mape::random_state({2, 2, 2}, 42);
    REQUIRE(a.amplitudes() == b.amplitudes()); // bitwise reproducible
    REQUIRE_THAT(a.norm(), WithinAbs(1.0, 1e-12));

    const auto c = mape::random_state({2, 2, 2}, 43);
    REQUIRE(std::norm(mape::inner_product(a, c)) < 1.0 - 1e-6);
}

TEST_CASE("schmidt family spectra", "[gallery]") {
    // c0 = 1: a product state, every single-party rank is 1.
    const auto product = mape::schmidt_state(4, 1.0, 0.0);
    for (int q = 1; q <= 4; ++q)
        REQUIRE(mape::rank(mape::coefficient_matrix(product, Bipartition(4, {q}))) == 1);

    // c0 = c1: the GHZ state.
    const auto balanced = mape::schmidt_state(3, helpers::kInvSqrt2, helpers::kInvSqrt2);
    const auto ghz = mape::ghz(3, 2);
    for (std::int64_t i = 0; i < balanced.dim(); ++i)
        REQUIRE_THAT(std::abs(balanced.amplitude(i) - ghz.amplitude(i)), WithinAbs(0.0, 1e-14));

    // generic weights: singular values are sqrt(p), sqrt(1-p) on every C_{q1}.
    const auto skew = mape::schmidt_state(4, std::sqrt(0.9), std::sqrt(0.1));
    for (int q = 1; q <= 4; ++q) {
        const auto sp = mape::singular_values(mape::coefficient_matrix(skew, Bipartition(4, {q})));
        REQUIRE(sp.rank == 2);
        REQUIRE_THAT(sp.singular_values[0], WithinAbs(std::sqrt(0.9), 1e-12));
        REQUIRE_THAT(sp.singular_values[1], WithinAbs(std::sqrt(0.1), 1e-12));
    }
}

TEST_CASE("schmidt family: paired singular values and equal purities", "[gallery]") {
    for (double p : {0.2, 0.5, 0.8}) {
        const auto state = mape::schmidt_state(5, std::sqrt(p), std::sqrt(1.0 - p));
        std::vector<double> first_sv;
        for (int q = 1; q <= 5; ++q) {
            const auto sp = mape::singular_values(mape::coefficient_matrix(state, Bipartition(5, {q})));
            REQUIRE(sp.rank == 2);
            if (q == 1) {
                first_sv = sp.singular_values;
            } else {
                REQUIRE_THAT(sp.singular_values[0], WithinAbs(first_sv[0], 1e-12));
                REQUIRE_THAT(sp.singular_values[1], WithinAbs(first_sv[1], 1e-12));
            }
        }
        // (n-1)-party reduced purities agree for every traced-out party.
        double first_purity = -1.0;
        for (int traced = 1; traced <= 5; ++traced) {
            std::vector<int> rows;
            for (int q = 1; q <= 5; ++q)
                if (q != traced) rows.push_back(q);
            const double pur = mape::purity(mape::reduced_density_matrix(state, Bipartition(5, rows)));
            if (traced == 1)
                first_purity = pur;
            else
                REQUIRE_THAT(pur, WithinAbs(first_purity, 1e-10));
        }
    }
}

TEST_CASE("gallery constructors validate their inputs", "[gallery]") {
    REQUIRE_THROWS_AS(mape::dicke(3, 4), mape::InvalidExcitationCount);
    REQUIRE_THROWS_AS(mape::dicke(3, -1), mape::InvalidExcitationCount);
    REQUIRE_THROWS_AS(mape::d3(3, 2, 2), mape::InvalidExcitationCount);
    REQUIRE_THROWS_AS(mape::schmidt_state(3, 1.0, 1.0), mape::NotNormalized);
    REQUIRE_THROWS_AS(mape::ghz(30, 2), mape::BudgetExceeded);
    REQUIRE_THROWS_AS(mape::ghz(1, 2), mape::Error);
}

TEST_CASE("state spec grammar round-trips every family", "[gallery]") {
    const auto dicke_spec = mape::parse_state_spec("dicke:n=6,l1=3");
    REQUIRE(dicke_spec.amplitudes() == mape::dicke(6, 3).amplitudes());

    const auto ghz_spec = mape::parse_state_spec("ghz:n=4,d=3");
    REQUIRE(ghz_spec.amplitudes() == mape::ghz(4, 3).amplitudes());

    const auto d3_spec = mape::parse_state_spec("d3:n=5,l1=2,l2=1");
    REQUIRE(d3_spec.amplitudes() == mape::d3(5, 2, 1).amplitudes());

    const auto schmidt_spec = mape::parse_state_spec("schmidt:n=5,p=0.9");
    REQUIRE(schmidt_spec.amplitudes() ==
            mape::schmidt_state(5, std::sqrt(0.9), std::sqrt(0.1)).amplitudes());

    const auto random_spec = mape::parse_state_spec("random:dims=2x3x2,seed=42");
    REQUIRE(random_spec.amplitudes() == mape::random_state({2, 3, 2}, 42).amplitudes());

    // seed defaults to 0
    const auto default_seed = mape::parse_state_spec("random:dims=2x2");
    REQUIRE(default_seed.amplitudes() == mape::random_state({2, 2}, 0).amplitudes());
}

TEST_CASE("state spec grammar rejects malformed input", "[gallery]") {
    REQUIRE_THROWS_AS(mape::parse_state_spec("bogus:n=3"), mape::ParseError);
    REQUIRE_THROWS_AS(mape::parse_state_spec("dicke"), mape::ParseError);
    REQUIRE_THROWS_AS(mape::parse_state_spec("dicke:n=3"), mape::ParseError);        // missing l1
    REQUIRE_THROWS_AS(mape::parse_state_spec("dicke:n=3,l1=x"), mape::ParseError);   // bad number
    REQUIRE_THROWS_AS(mape::parse_state_spec("dicke:n=3,l1=1,z=2"), mape::ParseError); // unknown key
    REQUIRE_THROWS_AS(mape::parse_state_spec("schmidt:n=3,p=1.5"), mape::ParseError);
    REQUIRE_THROWS_AS(mape::parse_state_spec("random:dims=2xx2"), mape::ParseError);
    REQUIRE_THROWS_AS(mape::parse_state_spec("ghz:n=,d=2"), mape::ParseError);
}
