#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mono/gauge.hpp"

using namespace mono;

namespace {

std::map<IntVec, long long> weight_multiset(const Theory& t) {
    std::map<IntVec, long long> out;
    for (const auto& m : t.matter)
        out[m.weight] += m.mult;
    return out;
}

long long total_weight_count(const Theory& t) {
    long long n = 0;
    for (const auto& m : t.matter)
        n += m.mult;
    return n;
}

QuiverTheory random_quiver(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nv(1, 4);
    std::uniform_int_distribution<int> dim(0, 3);
    QuiverTheory q;
    q.vertices = nv(rng);
    std::uniform_int_distribution<int> vx(0, q.vertices - 1);
    const int nedges = nv(rng) - 1;
    for (int e = 0; e < nedges; ++e)
        q.edges.emplace_back(vx(rng), vx(rng));
    q.dim_v.resize(static_cast<std::size_t>(q.vertices));
    q.dim_w.resize(static_cast<std::size_t>(q.vertices));
    bool any = false;
    for (int j = 0; j < q.vertices; ++j) {
        q.dim_v[static_cast<std::size_t>(j)] = dim(rng);
        q.dim_w[static_cast<std::size_t>(j)] = dim(rng);
        any = any || q.dim_v[static_cast<std::size_t>(j)] > 0;
    }
    if (!any)
        q.dim_v[0] = 1;
    return q;
}

} // namespace

TEST_CASE("quiver_to_theory: one flavored vertex") {
    QuiverTheory q;
    q.vertices = 1;
    q.dim_v = {1};
    q.dim_w = {2};
    const Theory t = quiver_to_theory(q);
    CHECK(t.group.factors == std::vector<int>{1});
    const auto weights = weight_multiset(t);
    CHECK(weights.size() == 1);
    CHECK(weights.at({1}) == 2);
}

TEST_CASE("quiver_to_theory: two-vertex chain") {
    QuiverTheory q;
    q.vertices = 2;
    q.edges = {{0, 1}};
    q.dim_v = {1, 1};
    q.dim_w = {1, 1};
    const Theory t = quiver_to_theory(q);
    CHECK(t.group.factors == std::vector<int>{1, 1});
    const auto weights = weight_multiset(t);
    CHECK(weights.at({-1, 1}) == 1);
    CHECK(weights.at({1, 0}) == 1);
    CHECK(weights.at({0, 1}) == 1);
    CHECK(total_weight_count(t) == 3);
}

TEST_CASE("quiver_to_theory: loop edge gives adjoint-like weights") {
    QuiverTheory q;
    q.vertices = 1;
    q.edges = {{0, 0}};
    q.dim_v = {2};
    q.dim_w = {0};
    const Theory t = quiver_to_theory(q);
    CHECK(t.group.factors == std::vector<int>{2});
    const auto weights = weight_multiset(t);
    CHECK(weights.at({0, 0}) == 2);
    CHECK(weights.at({1, -1}) == 1);
    CHECK(weights.at({-1, 1}) == 1);
}

TEST_CASE("quiver weight count matches the dimension formula") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const QuiverTheory q = random_quiver(rng);
        const Theory t = quiver_to_theory(q);
        long long expected = 0;
        for (const auto& [tail, head] : q.edges)
            expected += static_cast<long long>(q.dim_v[static_cast<std::size_t>(tail)]) *
                        q.dim_v[static_cast<std::size_t>(head)];
        for (int j = 0; j < q.vertices; ++j)
            expected += static_cast<long long>(q.dim_w[static_cast<std::size_t>(j)]) *
                        q.dim_v[static_cast<std::size_t>(j)];
        CHECK(total_weight_count(t) == expected);
        CHECK(validate_theory(t).empty());
    }
}

TEST_CASE("vertex reordering permutes the Cartan blocks") {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 30; ++trial) {
        const QuiverTheory q = random_quiver(rng);
        std::vector<int> perm(static_cast<std::size_t>(q.vertices));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        QuiverTheory p;
        p.vertices = q.vertices;
        p.dim_v.resize(static_cast<std::size_t>(q.vertices));
        p.dim_w.resize(static_cast<std::size_t>(q.vertices));
        for (int j = 0; j < q.vertices; ++j) {
            p.dim_v[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
                q.dim_v[static_cast<std::size_t>(j)];
            p.dim_w[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
                q.dim_w[static_cast<std::size_t>(j)];
        }
        for (const auto& [t_, h_] : q.edges)
            p.edges.emplace_back(perm[static_cast<std::size_t>(t_)],
                                 perm[static_cast<std::size_t>(h_)]);

        const Theory orig = quiver_to_theory(q);
        const Theory permuted = quiver_to_theory(p);

        // induced coordinate permutation: old block order -> new block order
        std::vector<int> old_offsets, new_offsets;
        std::vector<int> old_vertex_of_block;
        int off = 0;
        for (int j = 0; j < q.vertices; ++j) {
            if (q.dim_v[static_cast<std::size_t>(j)] == 0)
                continue;
            old_offsets.push_back(off);
            old_vertex_of_block.push_back(j);
            off += q.dim_v[static_cast<std::size_t>(j)];
        }
        std::map<int, int> new_offset_of_vertex;
        off = 0;
        for (int j = 0; j < p.vertices; ++j) {
            if (p.dim_v[static_cast<std::size_t>(j)] == 0)
                continue;
            new_offset_of_vertex[j] = off;
            off += p.dim_v[static_cast<std::size_t>(j)];
        }
        std::vector<int> coord_map(static_cast<std::size_t>(orig.group.rank()));
        for (std::size_t b = 0; b < old_offsets.size(); ++b) {
            const int j = old_vertex_of_block[b];
            const int base_new = new_offset_of_vertex.at(perm[static_cast<std::size_t>(j)]);
            for (int c = 0; c < q.dim_v[static_cast<std::size_t>(j)]; ++c)
                coord_map[static_cast<std::size_t>(old_offsets[b] + c)] = base_new + c;
        }

        std::map<IntVec, long long> mapped;
        for (const auto& m : orig.matter) {
            IntVec w(m.weight.size(), 0);
            for (std::size_t i = 0; i < m.weight.size(); ++i)
                w[static_cast<std::size_t>(coord_map[i])] = m.weight[i];
            mapped[w] += m.mult;
        }
        CHECK(mapped == weight_multiset(permuted));
    }
}

TEST_CASE("quiver with empty gauge group is rejected") {
    QuiverTheory q;
    q.vertices = 2;
    q.dim_v = {0, 0};
    q.dim_w = {1, 1};
    CHECK_THROWS_AS(quiver_to_theory(q), ValidationError);
}

TEST_CASE("toric_to_theory examples") {
    const auto u1_2fl = toric_to_theory(ChargeData::make(2, {{1, 1}}));
    CHECK(u1_2fl.group.factors == std::vector<int>{1});
    CHECK(weight_multiset(u1_2fl).at({1}) == 2);

    const auto charge2 = toric_to_theory(ChargeData::make(1, {{2}}));
    CHECK(charge2.group.factors == std::vector<int>{1});
    CHECK(weight_multiset(charge2).at({2}) == 1);

    const auto product = toric_to_theory(ChargeData::make(2, {{1, 0}, {0, 1}}));
    CHECK(product.group.factors == std::vector<int>{1, 1});
    CHECK(weight_multiset(product).at({1, 0}) == 1);
    CHECK(weight_multiset(product).at({0, 1}) == 1);
}

TEST_CASE("validate_theory reports coded violations") {
    Theory ok;
    ok.group.factors = {2};
    ok.matter.push_back({{1, 0}, 2});
    CHECK(validate_theory(ok).empty());

    Theory bad_len = ok;
    bad_len.matter.push_back({{1}, 1});
    const auto v1 = validate_theory(bad_len);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].code == "WEIGHT_LEN");

    Theory bad_mult = ok;
    bad_mult.matter.push_back({{0, 1}, 0});
    const auto v2 = validate_theory(bad_mult);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].code == "MULT_ZERO");

    Theory bad_factor;
    bad_factor.group.factors = {0};
    const auto v3 = validate_theory(bad_factor);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].code == "FACTOR_SIZE");
}
