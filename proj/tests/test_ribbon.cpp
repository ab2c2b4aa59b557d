#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ribbontab/ribbon.hpp"

using namespace ribbontab;

TEST_CASE("single strip enumeration") {
    auto s = enumerate_strips({}, 2, 1);
    std::vector<std::pair<Partition, int>> want{{{1, 1}, 1}, {{2}, 0}};
    CHECK(s == want);
    auto s3 = enumerate_strips({}, 3, 1);
    std::vector<std::pair<Partition, int>> want3{{{1, 1, 1}, 2}, {{2, 1}, 1}, {{3}, 0}};
    CHECK(s3 == want3);
    // adding zero ribbons is the identity
    CHECK(enumerate_strips({3, 1}, 2, 0) == std::vector<std::pair<Partition, int>>{{{3, 1}, 0}});
}

TEST_CASE("strips agree with the exhaustive tiler") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 6; ++n)
                for (const auto& inner : partitions_of(n))
                    CHECK(enumerate_strips(inner, k, m) == enumerate_strips_direct(inner, k, m));
}

TEST_CASE("strip tilings are unique") {
    for (int k = 2; k <= 3; ++k)
        for (const auto& inner : partitions_of(4))
            for (const auto& [outer, s2] : enumerate_strips(inner, k, 2)) {
                auto all = all_strip_tilings(inner, outer, k);
                CHECK(all.size() == 1);
                int tot = 0;
                for (const auto& r : all[0]) tot += r.spin2();
                CHECK(tot == s2);
            }
}

TEST_CASE("ribbon tableaux of shape 443") {
    // 3-ribbon tableaux of outer shape (4,4,3) and weight (1,1), over all
    // admissible inner shapes of size 5
    std::vector<std::vector<Partition>> chains;
    for (const auto& beta : partitions_of(5)) {
        if (!contains({4, 4, 3}, beta)) continue;
        for (const auto& T : enumerate_ribbon_tableaux({4, 4, 3}, beta, 3, {1, 1}))
            chains.push_back(T.chain);
    }
    CHECK(chains.size() == 3);
    std::sort(chains.begin(), chains.end());
    CHECK(chains[0] == std::vector<Partition>{{3, 2}, {4, 4}, {4, 4, 3}});
    CHECK(chains[1] == std::vector<Partition>{{4, 1}, {4, 2, 2}, {4, 4, 3}});
    CHECK(chains[2] == std::vector<Partition>{{4, 1}, {4, 4}, {4, 4, 3}});
}

TEST_CASE("max spin") {
    CHECK(max_spin2({3, 3, 3, 2, 1}, 3) == 7);
    CHECK(max_spin2({2}, 2) == 0);
    CHECK(max_spin2({1, 1}, 2) == 1);
    CHECK(max_spin2({}, 4) == 0);
    for (int k = 1; k <= 3; ++k) CHECK(max_spin2(Partition(k, 1), k) == k - 1);
    CHECK(max_spin2({2, 1}, 3) == 1);  // (2,1) is itself a 3-ribbon
    CHECK_THROWS(max_spin2({1, 1}, 3));
    // max spin is attained by some tableau and bounds all of them
    for (const auto& lam : partitions_of(6)) {
        auto cq = core_quotient(lam, 2);
        if (!cq.core.empty()) continue;
        int best = -1;
        for (const auto& T : enumerate_ribbon_tableaux(lam, {}, 2, Composition(3, 1)))
            best = std::max(best, T.spin2());
        CHECK(best == max_spin2(lam, 2));
    }
}

TEST_CASE("spin parity matches the sign of the tiling") {
    for (const auto& inner : partitions_of(3))
        for (int k = 2; k <= 3; ++k)
            for (const auto& [outer, s2] : enumerate_strips(inner, k, 2))
                CHECK(k_sign(outer, inner, k) == (s2 % 2 == 0 ? 1 : -1));
}

TEST_CASE("quotient correspondence on a large standard example") {
    Partition lam{8, 7, 7, 4, 1, 1, 1, 1, 1};
    Partition core{2, 1, 1};
    int k = 3;
    CHECK(core_quotient(lam, k).core == core);

    auto tableaux = enumerate_ribbon_tableaux(lam, core, k, Composition(9, 1));
    CHECK(tableaux.size() == 5040);

    std::vector<std::vector<std::vector<int>>> target1{
        {{4, 6}, {8}}, {{1, 7}, {2, 9}}, {{3, 5}}};
    bool found1 = false;
    for (const auto& T : tableaux) {
        auto tabs = stanton_white(T);
        std::vector<std::vector<std::vector<int>>> rows;
        for (const auto& t : tabs) rows.push_back(t.rows);
        if (rows == target1) found1 = true;
        // quotient shapes and a full round trip
        auto cq = core_quotient(lam, k);
        for (int r = 0; r < k; ++r) CHECK(tabs[r].outer == cq.quotient[r]);
        CHECK(stanton_white_inverse(tabs, core).chain == T.chain);
    }
    CHECK(found1);

    std::vector<std::vector<std::vector<int>>> target2{
        {{3, 3}, {4}}, {{1, 3}, {2, 4}}, {{2, 3}}};
    bool found2 = false;
    for (const auto& T : enumerate_ribbon_tableaux(lam, core, k, {1, 2, 4, 2})) {
        auto tabs = stanton_white(T);
        std::vector<std::vector<std::vector<int>>> rows;
        for (const auto& t : tabs) rows.push_back(t.rows);
        if (rows == target2) found2 = true;
    }
    CHECK(found2);
}

TEST_CASE("quotient correspondence round trips at small sizes") {
    for (int k = 2; k <= 3; ++k)
        for (const auto& lam : partitions_of(2 * k)) {
            auto cq = core_quotient(lam, k);
            if (!cq.core.empty()) continue;
            for (const auto& w : std::vector<Composition>{{2}, {1, 1}})
                for (const auto& T : enumerate_ribbon_tableaux(lam, {}, k, w)) {
                    auto tabs = stanton_white(T);
                    CHECK(stanton_white_inverse(tabs, {}).chain == T.chain);
                }
        }
}

TEST_CASE("domino column reading") {
    RibbonTableau T{2, {{}, {3, 1}, {4, 4}, {4, 4, 2}, {4, 4, 2, 1, 1}}};
    CHECK(column_reading(T) == word_from_string("431212"));
    CHECK(!is_yamanouchi(column_reading(T)));
    CHECK(T.weight() == Composition{2, 2, 1, 1});
}

TEST_CASE("yamanouchi domino tableaux") {
    auto y1 = enumerate_yamanouchi_domino({2, 2}, {1, 1});
    CHECK(y1.size() == 1);
    CHECK(y1[0].first.chain == std::vector<Partition>{{}, {2}, {2, 2}});
    auto y2 = enumerate_yamanouchi_domino({2, 2}, {2});
    CHECK(y2.size() == 1);
    CHECK(y2[0].second == 2);
    // every reported tableau reads Yamanouchi and carries its own spin
    for (const auto& lam : partitions_of(6)) {
        if (!core_quotient(lam, 2).core.empty()) continue;
        for (const auto& [T, s2] : enumerate_yamanouchi_domino(lam, {2, 1})) {
            CHECK(is_yamanouchi(column_reading(T)));
            CHECK(T.spin2() == s2);
        }
    }
}
