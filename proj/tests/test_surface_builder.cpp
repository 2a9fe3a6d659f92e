#include <doctest.h>

#include <random>
#include <stdexcept>

#include "weakdp/classifier.hpp"
#include "weakdp/surface_builder.hpp"

using namespace wdp;

namespace {

std::vector<int64_t> cycle_of(const SurfaceModel& m) {
    const auto c = dual_graph_cycle(m);
    return {c.labels().begin(), c.labels().end()};
}

BlowupScript random_script(std::mt19937& rng, int max_depth = 6) {
    static const Seed seeds[] = {Seed::P2, Seed::F0, Seed::F1, Seed::F2};
    std::uniform_int_distribution<int> seed_pick(0, 3);
    BlowupScript script{seeds[seed_pick(rng)], {}, {}};
    int len = script.seed == Seed::P2 ? 3 : 4;
    std::uniform_int_distribution<int> depth_pick(0, max_depth);
    const int depth = depth_pick(rng);
    for (int i = 0; i < depth; ++i) {
        std::uniform_int_distribution<int> corner(0, len - 1);
        script.steps.push_back(corner(rng));
        ++len;
    }
    return script;
}

}  // namespace

TEST_CASE("the bare triangle") {
    const SurfaceModel tri = build_from_script({Seed::P2, {}, "triangle"});
    CHECK(tri.loop_size() == 3);
    CHECK(cycle_of(tri) == std::vector<int64_t>{1, 1, 1});
    for (const auto& r : tri.loop()) CHECK(r.cls.coeffs()[0] == 1);
    CHECK(loop_divisor(tri).coeffs()[0] == 3);
    CHECK(cross_validate(tri).ok());
}

TEST_CASE("every seed model cross-validates") {
    for (Seed s : {Seed::P2, Seed::F0, Seed::F1, Seed::F2}) {
        const SurfaceModel m = seed_model(s);
        CHECK(cross_validate(m).ok());
        CHECK(loop_divisor(m) == -canonical_class(m.signature()));
    }
}

TEST_CASE("blowing all three triangle corners gives the hexagon") {
    const SurfaceModel x1 = build_from_script({Seed::P2, {0, 2, 4}, "X1"});
    CHECK(cycle_of(x1) == std::vector<int64_t>{-1, -1, -1, -1, -1, -1});
    CHECK(x1.signature().canonical_square() == 6);
    CHECK(cross_validate(x1).ok());
    CHECK(loop_divisor(x1) == -canonical_class(x1.signature()));
}

TEST_CASE("the degree-3 tower: three corners, then the three nodes on the exceptionals") {
    const SurfaceModel x5 = build_from_script({Seed::P2, {0, 2, 4, 1, 4, 7}, "X5"});
    CHECK(x5.signature().canonical_square() == 3);
    CHECK(normalize_cycle(dual_graph_cycle(x5)) ==
          normalize_cycle(LabelCycle({-1, -2, -2, -1, -2, -2, -1, -2, -2})));
    CHECK(cross_validate(x5).ok());
    CHECK(identify_figure(dual_graph_cycle(x5)) == 5);
}

TEST_CASE("two corners of the triangle give the degree-7 loop") {
    const SurfaceModel x9 = build_from_script({Seed::P2, {0, 2}, "X9"});
    CHECK(normalize_cycle(dual_graph_cycle(x9)) ==
          normalize_cycle(LabelCycle({0, 0, -1, -1, -1})));
    CHECK(identify_figure(dual_graph_cycle(x9)) == 9);
}

TEST_CASE("replay errors name the failing step") {
    try {
        build_from_script({Seed::P2, {0, 17}, {}});
        FAIL("expected a replay error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("a corrupted loop class is caught with a named assertion") {
    const SurfaceModel good = build_from_script({Seed::P2, {0, 2, 4}, {}});
    auto loop = good.loop();
    loop[1].cls = loop[1].cls + DivisorClass::exceptional(good.signature(), 2);
    const SurfaceModel bad(good.signature(), good.fan(), loop, good.script());
    const auto report = cross_validate(bad);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto& issue : report.issues)
        if (issue.check == "loop_simplicity" || issue.check == "anticanonical_sum" ||
            issue.check == "label_agreement")
            named = true;
    CHECK(named);
    CHECK_THROWS_AS(loop_divisor(bad), std::logic_error);
}

TEST_CASE("self-intersection corruption is caught") {
    const SurfaceModel good = build_from_script({Seed::P2, {0}, {}});
    auto loop = good.loop();
    loop[0].self_int = -5;
    const SurfaceModel bad(good.signature(), good.fan(), loop, good.script());
    const auto report = cross_validate(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues[0].check == "record_self_intersection");
}

TEST_CASE("property: replay is deterministic and always cross-validates") {
    std::mt19937 rng(23);
    for (int run = 0; run < 500; ++run) {
        const BlowupScript script = random_script(rng);
        const SurfaceModel a = build_from_script(script);
        const SurfaceModel b = build_from_script(script);
        REQUIRE(a.fan() == b.fan());
        REQUIRE(cycle_of(a) == cycle_of(b));
        REQUIRE(cross_validate(a).ok());
        REQUIRE(loop_divisor(a) == -canonical_class(a.signature()));
        // simple-loop bookkeeping: each component meets the rest twice
        for (const auto& r : a.loop()) {
            const auto rest = loop_divisor(a) - r.cls;
            REQUIRE(intersect(r.cls, rest) == 2);
        }
    }
}
