#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "weakdp/classifier.hpp"

using namespace wdp;

namespace {

std::vector<int64_t> vec(const LabelCycle& c) { return {c.labels().begin(), c.labels().end()}; }

}  // namespace

TEST_CASE("cycle normalization: lex-min over the dihedral orbit") {
    CHECK(vec(normalize_cycle(LabelCycle({1, 0, -2, -1, -1}))) ==
          std::vector<int64_t>{-2, -1, -1, 1, 0});
    CHECK(vec(normalize_cycle(LabelCycle({-1, -1, -1, -1, -1, -1}))) ==
          std::vector<int64_t>(6, -1));

    // reading a cycle in either direction gives the same canonical form
    const std::vector<int64_t> fig11 = {0, 1, -1, -1, -2};
    std::vector<int64_t> reversed(fig11.rbegin(), fig11.rend());
    CHECK(normalize_cycle(LabelCycle(fig11)) == normalize_cycle(LabelCycle(reversed)));
}

TEST_CASE("property: normalization is idempotent and rotation/reflection invariant") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> len_pick(3, 11);
    std::uniform_int_distribution<int64_t> label(-3, 2);
    for (int run = 0; run < 1500; ++run) {
        const int len = len_pick(rng);
        std::vector<int64_t> labels(static_cast<size_t>(len));
        for (auto& l : labels) l = label(rng);
        const LabelCycle c(labels);
        const LabelCycle canon = normalize_cycle(c);
        REQUIRE(normalize_cycle(canon) == canon);

        std::uniform_int_distribution<int> shift_pick(0, len - 1);
        const int shift = shift_pick(rng);
        std::vector<int64_t> rotated(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i)
            rotated[static_cast<size_t>(i)] = labels[static_cast<size_t>((i + shift) % len)];
        if (run % 2) std::reverse(rotated.begin(), rotated.end());
        REQUIRE(normalize_cycle(LabelCycle(rotated)) == canon);
    }
}

TEST_CASE("the default enumeration returns the twelve classes") {
    EnumerationStats stats;
    const auto classes = enumerate_classes(3, 7, all_seeds(), &stats);
    REQUIRE(classes.size() == 12);
    CHECK(stats.noether_violations == 0);

    std::multiset<int64_t> k2s;
    std::set<int> figures;
    for (const auto& c : classes) {
        k2s.insert(c.k2);
        figures.insert(c.figure_id);
        CHECK(c.k2 == c.cycle.k2());
        // witness replays to the classified cycle
        const auto model = build_from_script(c.witness);
        CHECK(normalize_cycle(dual_graph_cycle(model)) == c.cycle);
        // every label in the classified range
        for (int64_t l : c.cycle.labels()) {
            CHECK(l >= -2);
            CHECK(l <= 1);
        }
        CHECK(c.cycle.k2() == 12 - c.cycle.size());
    }
    CHECK(k2s == std::multiset<int64_t>{7, 7, 6, 6, 6, 6, 5, 5, 4, 4, 4, 3});
    CHECK(figures == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("narrow ranges") {
    const auto top = enumerate_classes(7, 7);
    REQUIRE(top.size() == 2);
    std::set<int> figs;
    for (const auto& c : top) figs.insert(c.figure_id);
    CHECK(figs == std::set<int>{9, 11});

    CHECK(enumerate_classes(3, 3).size() == 1);
    CHECK_THROWS_AS(enumerate_classes(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_classes(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_classes(5, 4), std::invalid_argument);
}

TEST_CASE("figure identification") {
    CHECK(identify_figure(LabelCycle({-1, -1, -1, -1, -1, -1})) == 1);
    CHECK(identify_figure(LabelCycle({0, 0, -1, -1, -1})) == 9);
    CHECK(identify_figure(LabelCycle({-1, -1, 0, 0, -1})) == 9);  // any rotation
    CHECK_FALSE(identify_figure(LabelCycle({1, 1, 1})).has_value());
    CHECK_FALSE(identify_figure(LabelCycle({0, 0, 0, 0})).has_value());

    // the twelve table cycles are pairwise distinct under normalization and
    // satisfy the Noether identity
    std::set<std::vector<int64_t>> canon;
    for (const auto& e : figure_table()) {
        const LabelCycle c(e.cycle);
        CHECK(c.k2() == 12 - c.size());
        canon.insert(vec(normalize_cycle(c)));
    }
    CHECK(canon.size() == 12);
}

TEST_CASE("seed differential: the plane alone already reaches all twelve") {
    const auto from_p2 = enumerate_classes(3, 7, {Seed::P2});
    CHECK(from_p2.size() == 12);
    for (const auto& c : from_p2) CHECK(c.witness.seed == Seed::P2);
    const auto from_full = enumerate_classes(3, 7, all_seeds());
    std::set<std::vector<int64_t>> a, b;
    for (const auto& c : from_p2) a.insert(vec(c.cycle));
    for (const auto& c : from_full) b.insert(vec(c.cycle));
    CHECK(a == b);
    // F0/F2 towers add no classes beyond the plane-reachable ones
    const auto from_f = enumerate_classes(3, 7, {Seed::F0, Seed::F2});
    std::set<std::vector<int64_t>> f;
    for (const auto& c : from_f) f.insert(vec(c.cycle));
    for (const auto& cyc : f) CHECK(a.count(cyc) == 1);
}

TEST_CASE("blow-down web against the printed chains") {
    const auto classes = enumerate_classes();
    const BlowdownWeb web = blowdown_web(classes);

    CHECK(web.escapes.empty());  // closure: all K^2 <= 7 targets stay inside

    auto has = [&web](int from, int to) {
        return std::find(web.edges.begin(), web.edges.end(), BlowdownEdge{from, to}) !=
               web.edges.end();
    };
    for (const auto& e : catalogue_chains().unambiguous)
        CHECK_MESSAGE(has(e.from_figure, e.to_figure), "edge ", e.from_figure, "->",
                      e.to_figure);
    // computed resolution of the duplicated portion
    CHECK(has(4, 2));
    CHECK(has(3, 2));
    CHECK(has(2, 1));
    // contracting the (-1) between a (-2) and a (-1) in the degree-5 cycle
    CHECK(has(2, 6));

    // the degree-7 classes contract out of the classified range
    std::set<std::pair<int, Seed>> hirz(web.hirzebruch_targets.begin(),
                                        web.hirzebruch_targets.end());
    CHECK(hirz.count({9, Seed::F0}) == 1);
    CHECK(hirz.count({11, Seed::F2}) == 1);

    // every edge raises K^2 by exactly one
    std::map<int, int64_t> k2_of;
    for (const auto& c : classes) k2_of[c.figure_id] = c.k2;
    for (const auto& e : web.edges)
        CHECK(k2_of[e.to_figure] == k2_of[e.from_figure] + 1);
}

TEST_CASE("widening the range below 3 adds nothing: the degree bound is emergent") {
    EnumerationStats stats;
    const auto classes = enumerate_classes(1, 7, all_seeds(), &stats);
    REQUIRE(classes.size() == 12);
    for (const auto& c : classes) CHECK(c.k2 >= 3);
    CHECK(stats.noether_violations == 0);
}
