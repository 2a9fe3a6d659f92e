#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "weakdp/toric_fan.hpp"

using namespace wdp;

namespace {

std::vector<int64_t> labels_of(const Fan2D& fan) {
    const auto c = boundary_labels(fan);
    return {c.labels().begin(), c.labels().end()};
}

}  // namespace

TEST_CASE("seed fans and their labels") {
    CHECK(labels_of(seed_fan(Seed::P2)) == std::vector<int64_t>{1, 1, 1});
    CHECK(labels_of(seed_fan(Seed::F0)) == std::vector<int64_t>{0, 0, 0, 0});
    CHECK(labels_of(seed_fan(Seed::F1)) == std::vector<int64_t>{0, -1, 0, 1});
    CHECK(labels_of(seed_fan(Seed::F2)) == std::vector<int64_t>{0, -2, 0, 2});

    CHECK(seed_fan(Seed::P2).rays()[2] == RayVec{-1, -1});
    CHECK(parse_seed("F2") == Seed::F2);
    CHECK_THROWS_AS(parse_seed("F3"), std::invalid_argument);
}

TEST_CASE("star subdivision of the plane gives F1") {
    const Fan2D p2 = seed_fan(Seed::P2);
    for (int corner = 0; corner < 3; ++corner) {
        const Fan2D f1 = p2.star_subdivide(corner);
        CHECK(f1.size() == 4);
        CHECK(check_smooth_complete(f1));
        CHECK(boundary_labels(f1).k2() == 8);
    }
    CHECK(labels_of(p2.star_subdivide(0)) == std::vector<int64_t>{0, -1, 0, 1});
    CHECK_THROWS_AS(p2.star_subdivide(3), std::invalid_argument);
    CHECK_THROWS_AS(p2.star_subdivide(-1), std::invalid_argument);
}

TEST_CASE("hexagonal fan carries six (-1)-labels") {
    const Fan2D hex({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
    CHECK(labels_of(hex) == std::vector<int64_t>(6, -1));
    CHECK(is_weak_del_pezzo(hex));
    CHECK(boundary_labels(hex).k2() == 6);
}

TEST_CASE("smooth-complete detection") {
    CHECK(check_smooth_complete(seed_fan(Seed::P2)));
    CHECK(check_smooth_complete(std::vector<RayVec>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    // wrap-around determinant is 2: not a smooth fan
    CHECK_FALSE(check_smooth_complete(std::vector<RayVec>{{1, 0}, {0, 1}, {-1, -2}}));
    // clockwise
    CHECK_FALSE(check_smooth_complete(std::vector<RayVec>{{1, 0}, {-1, -1}, {0, 1}}));
    // non-primitive ray
    CHECK_FALSE(check_smooth_complete(std::vector<RayVec>{{2, 0}, {0, 1}, {-1, -1}}));
    CHECK_FALSE(check_smooth_complete(std::vector<RayVec>{{1, 0}, {0, 1}}));
    // all determinants +1 but winding twice around: not a fan
    CHECK_FALSE(check_smooth_complete(std::vector<RayVec>{{1, 0},
                                                          {1, 1},
                                                          {0, 1},
                                                          {-1, 0},
                                                          {-1, -1},
                                                          {0, -1},
                                                          {1, 0},
                                                          {1, 1},
                                                          {0, 1},
                                                          {-1, 0},
                                                          {-1, -1},
                                                          {0, -1}}));
    CHECK_THROWS_AS(Fan2D({{1, 0}, {0, 1}, {-1, -2}}), std::invalid_argument);
}

TEST_CASE("weak del Pezzo test reads nef and big off the labels") {
    CHECK(is_weak_del_pezzo(seed_fan(Seed::F2)));
    const Fan2D f3({{1, 0}, {0, 1}, {-1, 3}, {0, -1}});
    CHECK(boundary_labels(f3).labels()[1] == -3);
    CHECK_FALSE(is_weak_del_pezzo(f3));
}

TEST_CASE("F0 subdivision lands on the degree-7 cycle from every corner") {
    const Fan2D f0 = seed_fan(Seed::F0);
    const std::multiset<int64_t> expect{-1, -1, -1, 0, 0};
    for (int corner = 0; corner < 4; ++corner) {
        const auto child = f0.star_subdivide(corner);
        const auto labels = labels_of(child);
        CHECK(std::multiset<int64_t>(labels.begin(), labels.end()) == expect);
        CHECK(boundary_labels(child).k2() == 7);
    }
}

TEST_CASE("property: subdivision and the label transform agree on random towers") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> seed_pick(0, 3);
    static const Seed seeds[] = {Seed::P2, Seed::F0, Seed::F1, Seed::F2};
    for (int run = 0; run < 1200; ++run) {
        Fan2D fan = seed_fan(seeds[seed_pick(rng)]);
        std::uniform_int_distribution<int> depth_pick(0, 6);
        const int depth = depth_pick(rng);
        for (int step = 0; step < depth; ++step) {
            std::uniform_int_distribution<int> corner_pick(0, fan.size() - 1);
            const int corner = corner_pick(rng);
            const LabelCycle before = boundary_labels(fan);
            fan = fan.star_subdivide(corner);
            REQUIRE(check_smooth_complete(fan));
            const LabelCycle after = boundary_labels(fan);
            REQUIRE(after == corner_insertion(before, corner));
            REQUIRE(after.k2() == before.k2() - 1);
            REQUIRE(after.k2() == 12 - fan.size());  // Noether
        }
    }
}

TEST_CASE("contracting a fresh exceptional label undoes the insertion") {
    std::mt19937 rng(19);
    for (int run = 0; run < 400; ++run) {
        Fan2D fan = seed_fan(Seed::P2);
        std::uniform_int_distribution<int> depth_pick(1, 5);
        const int depth = depth_pick(rng);
        for (int step = 0; step < depth; ++step) {
            std::uniform_int_distribution<int> corner_pick(0, fan.size() - 1);
            fan = fan.star_subdivide(corner_pick(rng));
        }
        const LabelCycle labels = boundary_labels(fan);
        std::uniform_int_distribution<int> corner_pick(0, fan.size() - 1);
        const int corner = corner_pick(rng);
        const LabelCycle grown = corner_insertion(labels, corner);
        REQUIRE(contract_minus_one(grown, (corner + 1) % grown.size()) == labels);
    }
}

TEST_CASE("lex-min rotation is stable") {
    const Fan2D fan = seed_fan(Seed::P2).star_subdivide(1);
    const Fan2D rotated = fan.rotated_to_lex_min();
    CHECK(rotated.rays()[0] == RayVec{-1, -1});
    CHECK(rotated.rotated_to_lex_min() == rotated);
    CHECK(boundary_labels(rotated).k2() == boundary_labels(fan).k2());
}
