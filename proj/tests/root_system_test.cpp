#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mono/root_system.hpp"
#include "support/oracles.hpp"

using namespace mono;

namespace {

IntVec random_fund(std::mt19937_64& rng, int rank, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    IntVec v(static_cast<std::size_t>(rank));
    for (auto& c : v)
        c = dist(rng);
    return v;
}

} // namespace

TEST_CASE("build_root_system generates the classical positive root counts") {
    CHECK(RootSystem::build(SimpleSeries::A, 1).positive_roots().size() == 1);
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(a2.positive_roots().size() == 3);
    // closure contains alpha1, alpha2, alpha1+alpha2
    const std::set<IntVec> roots(a2.positive_roots().begin(), a2.positive_roots().end());
    CHECK(roots.count({1, 0}) == 1);
    CHECK(roots.count({0, 1}) == 1);
    CHECK(roots.count({1, 1}) == 1);

    CHECK(RootSystem::build(SimpleSeries::G, 2).positive_roots().size() == 6);
    CHECK(RootSystem::build(SimpleSeries::B, 3).positive_roots().size() == 9);
    CHECK(RootSystem::build(SimpleSeries::C, 3).positive_roots().size() == 9);
    CHECK(RootSystem::build(SimpleSeries::D, 4).positive_roots().size() == 12);
    CHECK(RootSystem::build(SimpleSeries::D, 3).positive_roots().size() == 6); // D3 = A3
    CHECK(RootSystem::build(SimpleSeries::F, 4).positive_roots().size() == 24);
    CHECK(RootSystem::build(SimpleSeries::E, 6).positive_roots().size() == 36);
    CHECK(RootSystem::build(SimpleSeries::E, 7).positive_roots().size() == 63);
}

TEST_CASE("root system invariants") {
    for (auto [s, r] : {std::pair{SimpleSeries::A, 3}, {SimpleSeries::B, 2},
                        {SimpleSeries::G, 2}, {SimpleSeries::D, 4}}) {
        const auto rs = RootSystem::build(s, r);
        for (int i = 0; i < r; ++i) {
            CHECK(rs.cartan()[i][i] == 2);
            for (int j = 0; j < r; ++j)
                if (i != j)
                    CHECK(rs.cartan()[i][j] <= 0);
        }
        for (const auto& root : rs.positive_roots())
            for (long long c : root)
                CHECK(c >= 0);
    }
}

TEST_CASE("invalid simple types are rejected") {
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::A, 0), ValidationError);
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::B, 1), ValidationError);
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::D, 2), ValidationError);
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::E, 9), ValidationError);
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::F, 3), ValidationError);
    CHECK_THROWS_AS(RootSystem::build(SimpleSeries::G, 3), ValidationError);
    CHECK_THROWS_AS(series_from_char('X'), ValidationError);
}

TEST_CASE("dominance order examples") {
    const auto a1 = RootSystem::build(SimpleSeries::A, 1);
    CHECK(dominance_leq(a1, fund_weight({0}), fund_weight({2})));       // 2w1 = alpha1
    CHECK_FALSE(dominance_leq(a1, fund_weight({0}), fund_weight({1}))); // w1 = alpha1/2

    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(dominance_leq(a2, fund_weight({0, 0}), fund_weight({1, 1})));

    CHECK_THROWS_AS(dominance_leq(a1, fund_weight({0}), root_weight({1})), ValidationError);
}

TEST_CASE("dominance is a partial order on random small weights") {
    std::mt19937_64 rng(11);
    for (auto [s, r] : {std::pair{SimpleSeries::A, 2}, {SimpleSeries::A, 3},
                        {SimpleSeries::B, 2}}) {
        const auto rs = RootSystem::build(s, r);
        std::vector<IntVec> sample;
        for (int i = 0; i < 12; ++i)
            sample.push_back(random_fund(rng, r, -4, 4));
        for (const auto& x : sample) {
            CHECK(dominance_leq(rs, fund_weight(x), fund_weight(x))); // reflexive
            for (const auto& y : sample) {
                if (dominance_leq(rs, fund_weight(x), fund_weight(y)) &&
                    dominance_leq(rs, fund_weight(y), fund_weight(x)))
                    CHECK(x == y); // antisymmetric
                for (const auto& z : sample) {
                    if (dominance_leq(rs, fund_weight(x), fund_weight(y)) &&
                        dominance_leq(rs, fund_weight(y), fund_weight(z)))
                        CHECK(dominance_leq(rs, fund_weight(x), fund_weight(z)));
                }
            }
        }
    }
}

TEST_CASE("freudenthal multiplicity examples") {
    const auto a1 = RootSystem::build(SimpleSeries::A, 1);
    CHECK(freudenthal_multiplicity(a1, fund_weight({2}), fund_weight({0})) == 1);
    CHECK(freudenthal_multiplicity(a1, fund_weight({2}), fund_weight({2})) == 1);
    CHECK(freudenthal_multiplicity(a1, fund_weight({2}), fund_weight({-2})) == 1);
    CHECK(freudenthal_multiplicity(a1, fund_weight({2}), fund_weight({1})) == 0);

    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(freudenthal_multiplicity(a2, fund_weight({1, 1}), fund_weight({0, 0})) == 2);
    CHECK(freudenthal_multiplicity(a2, fund_weight({1, 1}), fund_weight({1, 1})) == 1);
    CHECK(freudenthal_multiplicity(a2, fund_weight({2, 2}), fund_weight({0, 0})) == 3);

    CHECK_THROWS_AS(freudenthal_multiplicity(a2, fund_weight({-1, 0}), fund_weight({0, 0})),
                    ValidationError);
}

TEST_CASE("multiplicity is Weyl invariant") {
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    const auto lambda = fund_weight({2, 1});
    for (const auto& mu : weyl_orbit(a2, fund_weight({1, 0}))) {
        CHECK(freudenthal_multiplicity(a2, lambda, fund_weight(mu)) ==
              freudenthal_multiplicity(a2, lambda, fund_weight({1, 0})));
    }
    const auto b2 = RootSystem::build(SimpleSeries::B, 2);
    const auto lam_b = fund_weight({1, 1});
    for (const auto& mu : weyl_orbit(b2, fund_weight({0, 1}))) {
        CHECK(freudenthal_multiplicity(b2, lam_b, fund_weight(mu)) ==
              freudenthal_multiplicity(b2, lam_b, fund_weight({0, 1})));
    }
}

TEST_CASE("multiplicities sum to the Weyl dimension") {
    for (auto [s, r] : {std::pair{SimpleSeries::A, 1}, {SimpleSeries::A, 2},
                        {SimpleSeries::A, 3}, {SimpleSeries::B, 2}}) {
        const auto rs = RootSystem::build(s, r);
        for (const auto& lam : testing::dominant_weights_paired_below(rs, 16)) {
            BigInt total = 0;
            for (const auto& mu : testing::dominant_weights_below(rs, lam)) {
                const long long m = freudenthal_multiplicity(rs, fund_weight(lam), fund_weight(mu));
                total += BigInt(m) * static_cast<long long>(weyl_orbit(rs, fund_weight(mu)).size());
            }
            CHECK(total == weyl_dim(rs, fund_weight(lam)));
        }
    }
}

TEST_CASE("nonzero multiplicity forces dominance") {
    std::mt19937_64 rng(13);
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    const auto lambda = fund_weight({2, 1});
    for (int i = 0; i < 60; ++i) {
        const IntVec mu = random_fund(rng, 2, -5, 5);
        if (freudenthal_multiplicity(a2, lambda, fund_weight(mu)) > 0) {
            const IntVec rep = a2.dominant_representative(mu);
            CHECK(dominance_leq(a2, fund_weight(rep), lambda));
        }
    }
}

TEST_CASE("weyl_dim examples") {
    const auto a1 = RootSystem::build(SimpleSeries::A, 1);
    CHECK(weyl_dim(a1, fund_weight({1})) == 2);
    CHECK(weyl_dim(a1, fund_weight({2})) == 3);
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(weyl_dim(a2, fund_weight({1, 1})) == 8);
    CHECK_THROWS_AS(weyl_dim(a2, fund_weight({-1, 0})), ValidationError);
}

TEST_CASE("weyl_molien_degrees matches the classical invariant degrees") {
    CHECK(weyl_molien_degrees(RootSystem::build(SimpleSeries::A, 1)).degrees ==
          std::vector<int>{2});
    const auto a2 = weyl_molien_degrees(RootSystem::build(SimpleSeries::A, 2));
    CHECK(a2.degrees == std::vector<int>{2, 3});
    CHECK(a2.exponents == std::vector<int>{1, 2});
    CHECK(weyl_molien_degrees(RootSystem::build(SimpleSeries::B, 2)).degrees ==
          std::vector<int>{2, 4});
    CHECK(weyl_molien_degrees(RootSystem::build(SimpleSeries::G, 2)).degrees ==
          std::vector<int>{2, 6});
    CHECK(weyl_molien_degrees(RootSystem::build(SimpleSeries::D, 4)).degrees ==
          std::vector<int>{2, 4, 4, 6});
    CHECK(weyl_molien_degrees(RootSystem::build(SimpleSeries::F, 4)).degrees ==
          std::vector<int>{2, 6, 8, 12});
}

TEST_CASE("invariant degrees multiply to the group order") {
    for (auto [s, r] : {std::pair{SimpleSeries::A, 3}, {SimpleSeries::B, 3},
                        {SimpleSeries::G, 2}, {SimpleSeries::D, 4}}) {
        const auto rs = RootSystem::build(s, r);
        long long product = 1;
        for (int d : weyl_molien_degrees(rs).degrees)
            product *= d;
        CHECK(product == weyl_order(rs));
    }
}

TEST_CASE("Molien series times prod(1 - t^d) is 1 up to the cap") {
    const int cap = 24;
    for (auto [s, r] : {std::pair{SimpleSeries::A, 2}, {SimpleSeries::B, 2},
                        {SimpleSeries::A, 3}}) {
        const auto rs = RootSystem::build(s, r);
        // independent Molien expansion: average the geometric expansions of
        // 1/det(1 - t w) obtained by explicit matrix powers
        std::vector<BigRat> molien(cap + 1, BigRat(0));
        long long order = 0;
        for_each_weyl_element(rs, [&](const WeylElement& w, int) {
            ++order;
            // trace of w^k gives the power sums; expand via log-free recursion:
            // 1/det(1-tw) = sum_k h_k t^k with h_k = (1/k) sum_{j=1..k} tr(w^j) h_{k-j}
            std::vector<IntMat> powers{w.matrix};
            std::vector<long long> traces;
            for (int k = 1; k <= cap; ++k) {
                if (k > 1) {
                    const IntMat& a = powers.back();
                    IntMat next(a.size(), IntVec(a.size(), 0));
                    for (std::size_t i = 0; i < a.size(); ++i)
                        for (std::size_t j = 0; j < a.size(); ++j)
                            for (std::size_t l = 0; l < a.size(); ++l)
                                next[i][j] += a[i][l] * w.matrix[l][j];
                    powers.push_back(next);
                }
                long long tr = 0;
                for (std::size_t i = 0; i < powers.back().size(); ++i)
                    tr += powers.back()[i][i];
                traces.push_back(tr);
            }
            std::vector<BigRat> h(cap + 1, BigRat(0));
            h[0] = 1;
            for (int k = 1; k <= cap; ++k) {
                BigRat acc = 0;
                for (int j = 1; j <= k; ++j)
                    acc += BigRat(traces[static_cast<std::size_t>(j - 1)]) *
                           h[static_cast<std::size_t>(k - j)];
                h[static_cast<std::size_t>(k)] = acc / k;
            }
            for (int k = 0; k <= cap; ++k)
                molien[static_cast<std::size_t>(k)] += h[static_cast<std::size_t>(k)];
        });
        for (auto& c : molien)
            c /= order;
        // multiply by prod (1 - t^{d_i}) and compare with 1
        for (int d : weyl_molien_degrees(rs, cap).degrees)
            for (int k = cap; k >= d; --k)
                molien[static_cast<std::size_t>(k)] -= molien[static_cast<std::size_t>(k - d)];
        CHECK(molien[0] == 1);
        for (int k = 1; k <= cap; ++k)
            CHECK(molien[static_cast<std::size_t>(k)] == 0);
    }
}

TEST_CASE("capacity guard fires for huge Weyl groups") {
    CHECK_THROWS_AS(weyl_molien_degrees(RootSystem::build(SimpleSeries::E, 8)),
                    CapacityError);
    CHECK_THROWS_AS(weyl_order(RootSystem::build(SimpleSeries::B, 8)), CapacityError);
}

TEST_CASE("pairing_2rho examples") {
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(pairing_2rho(a2, fund_weight({0, 0})) == 0);
    CHECK(pairing_2rho(a2, fund_weight({1, 0})) == 2);
    CHECK(pairing_2rho(a2, fund_weight({1, 1})) == 4);
    // Weyl-invariant extension: |.| on each coroot pairing
    const auto a1 = RootSystem::build(SimpleSeries::A, 1);
    CHECK(pairing_2rho(a1, fund_weight({-2})) == 2);
    // <2rho^vee, alpha_i> = 2
    CHECK(a2.signed_pairing_2rho(a2.to_fundamental(root_weight({1, 0}))) == 2);
    CHECK(a2.signed_pairing_2rho(a2.to_fundamental(root_weight({0, 1}))) == 2);
}

TEST_CASE("w0 is an involution sending rho to -rho") {
    for (auto [s, r] : {std::pair{SimpleSeries::A, 2}, {SimpleSeries::A, 3},
                        {SimpleSeries::D, 4}, {SimpleSeries::B, 2}}) {
        const auto rs = RootSystem::build(s, r);
        IntVec rho(static_cast<std::size_t>(r), 1);
        IntVec neg = rs.w0_action(rho);
        for (long long c : neg)
            CHECK(c == -1);
        std::mt19937_64 rng(3);
        for (int i = 0; i < 5; ++i) {
            const IntVec x = random_fund(rng, r, -3, 3);
            CHECK(rs.w0_action(rs.w0_action(x)) == x);
        }
    }
    // A2: w0(omega1) = -omega2
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    CHECK(a2.w0_action({1, 0}) == IntVec{0, -1});
}

TEST_CASE("mv_report examples (A1, lambda = 2 omega1)") {
    const auto a1 = RootSystem::build(SimpleSeries::A, 1);
    const auto lambda = fund_weight({2});

    const auto at_zero = mv_report(a1, lambda, fund_weight({0}));
    CHECK(at_zero.nonempty);
    CHECK(at_zero.dim_attractor == 1);
    CHECK(at_zero.dim_repellent == 1);
    CHECK(at_zero.hyperbolic_degree == 0);

    const auto at_top = mv_report(a1, lambda, fund_weight({2}));
    CHECK(at_top.nonempty);
    CHECK(at_top.dim_attractor == 2);
    CHECK(at_top.hyperbolic_degree == 2);

    const auto outside = mv_report(a1, lambda, fund_weight({4}));
    CHECK_FALSE(outside.nonempty);
    CHECK_FALSE(outside.dim_attractor.has_value());
    CHECK(outside.hyperbolic_degree == 4);
}

TEST_CASE("mv_report attractor/repellent symmetry identity") {
    // adjoint support is symmetric: dim_att(nu) + dim_att(-nu) = <2 lambda, rho^vee>
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    const auto lambda = fund_weight({1, 1});
    const long long total = a2.signed_pairing_2rho({1, 1});
    for (const auto& root : a2.positive_roots()) {
        const IntVec nu = a2.to_fundamental(root_weight(root));
        IntVec neg = nu;
        for (auto& c : neg)
            c = -c;
        const auto plus = mv_report(a2, lambda, fund_weight(nu));
        const auto minus = mv_report(a2, lambda, fund_weight(neg));
        REQUIRE(plus.nonempty);
        REQUIRE(minus.nonempty);
        CHECK(*plus.dim_attractor + *minus.dim_attractor == total);
        CHECK(*plus.dim_repellent == *minus.dim_attractor);
    }
}

TEST_CASE("freudenthal agrees with the Kostant oracle on A2") {
    const auto a2 = RootSystem::build(SimpleSeries::A, 2);
    testing::KostantOracle oracle(a2);
    for (const auto& lam : testing::dominant_weights_paired_below(a2, 10)) {
        for (const auto& mu : testing::dominant_weights_below(a2, lam))
            CHECK(freudenthal_multiplicity(a2, fund_weight(lam), fund_weight(mu)) ==
                  oracle.multiplicity(lam, mu));
    }
}
