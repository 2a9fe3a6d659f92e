#include <doctest.h>

#include <random>
#include <stdexcept>

#include "weakdp/pic_lattice.hpp"

using namespace wdp;

namespace {

DivisorClass random_class(std::mt19937& rng, const LatticeSignature& sig) {
    std::uniform_int_distribution<int64_t> coeff(-9, 9);
    std::vector<int64_t> c(static_cast<size_t>(sig.rank()));
    for (auto& v : c) v = coeff(rng);
    return DivisorClass(sig, std::move(c));
}

LatticeSignature random_signature(std::mt19937& rng, int max_n = 8) {
    std::uniform_int_distribution<int> form(0, 2);
    std::uniform_int_distribution<int> n(0, max_n);
    static const SeedForm forms[] = {SeedForm::Plane, SeedForm::Quadric, SeedForm::F2};
    return LatticeSignature(forms[form(rng)], n(rng));
}

}  // namespace

TEST_CASE("intersection pairing on the standard basis") {
    LatticeSignature sig = LatticeSignature::plane(2);
    const DivisorClass h(sig, {1, 0, 0});
    const DivisorClass e1 = DivisorClass::exceptional(sig, 1);
    const DivisorClass e2 = DivisorClass::exceptional(sig, 2);

    CHECK(intersect(h, h) == 1);
    CHECK(intersect(e1, e1) == -1);
    CHECK(intersect(h, e1) == 0);
    CHECK((h - e1 - e2).self_intersection() == -1);
}

TEST_CASE("intersection requires matching signatures") {
    const DivisorClass a(LatticeSignature::plane(1), {1, 0});
    const DivisorClass b(LatticeSignature::plane(2), {1, 0, 0});
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("canonical class and its square") {
    const auto k0 = canonical_class(LatticeSignature::plane(0));
    CHECK(k0.coeffs()[0] == -3);
    CHECK(k0.self_intersection() == 9);

    const auto k3 = canonical_class(LatticeSignature::plane(3));
    CHECK(std::vector<int64_t>(k3.coeffs().begin(), k3.coeffs().end()) ==
          std::vector<int64_t>{-3, 1, 1, 1});
    CHECK(k3.self_intersection() == 6);

    CHECK(canonical_class(LatticeSignature::plane(6)).self_intersection() == 3);

    for (int n = 0; n <= 12; ++n)
        CHECK(canonical_class(LatticeSignature::plane(n)).self_intersection() == 9 - n);

    // Quadric and F2 seeds sit at K^2 = 8.
    CHECK(canonical_class(LatticeSignature(SeedForm::Quadric, 0)).self_intersection() == 8);
    CHECK(canonical_class(LatticeSignature(SeedForm::F2, 0)).self_intersection() == 8);
    CHECK(canonical_class(LatticeSignature(SeedForm::Quadric, 3)).self_intersection() == 5);
}

TEST_CASE("Euler characteristic formula") {
    LatticeSignature sig = LatticeSignature::plane(3);
    CHECK(euler_characteristic(DivisorClass::zero(sig)) == 1);
    CHECK(euler_characteristic(-canonical_class(sig)) == 7);
    CHECK(euler_characteristic(DivisorClass::exceptional(sig, 1)) == 1);

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto s = random_signature(rng);
        CHECK(euler_characteristic(DivisorClass::zero(s)) == 1);
    }
}

TEST_CASE("blowup pullback appends a zero and embeds isometrically") {
    LatticeSignature sig0 = LatticeSignature::plane(0);
    LatticeSignature sig1 = LatticeSignature::plane(1);
    const DivisorClass h(sig0, {1});
    const auto hp = blowup_pullback(h, sig1);
    CHECK(std::vector<int64_t>(hp.coeffs().begin(), hp.coeffs().end()) ==
          std::vector<int64_t>{1, 0});

    // K_new = pullback(K) + E_new
    const auto k1 = canonical_class(sig1);
    const auto lift = blowup_pullback(canonical_class(sig0), sig1);
    CHECK(lift + DivisorClass::exceptional(sig1, 1) == k1);

    CHECK_THROWS_AS(blowup_pullback(h, LatticeSignature::plane(2)), std::invalid_argument);
    CHECK_THROWS_AS(blowup_pullback(h, LatticeSignature(SeedForm::Quadric, 1)),
                    std::invalid_argument);
}

TEST_CASE("property: D.(D - K) is always even, so the parity guard never fires") {
    std::mt19937 rng(5);
    for (int i = 0; i < 1200; ++i) {
        const auto sig = random_signature(rng);
        const auto d = random_class(rng, sig);
        CHECK_NOTHROW(euler_characteristic(d));
    }
}

TEST_CASE("property: bilinearity and symmetry of the pairing") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int64_t> scalar(-4, 4);
    for (int i = 0; i < 1500; ++i) {
        const auto sig = random_signature(rng);
        const auto a = random_class(rng, sig);
        const auto b = random_class(rng, sig);
        const auto c = random_class(rng, sig);
        const int64_t alpha = scalar(rng);
        const int64_t beta = scalar(rng);
        REQUIRE(intersect(a, b) == intersect(b, a));
        REQUIRE(intersect(a, b * alpha + c * beta) ==
                alpha * intersect(a, b) + beta * intersect(a, c));
    }
}

TEST_CASE("property: pullback is an isometric embedding") {
    std::mt19937 rng(13);
    for (int i = 0; i < 1500; ++i) {
        const auto sig = random_signature(rng, 7);
        const LatticeSignature target(sig.form(), sig.exceptional_count() + 1);
        const auto a = random_class(rng, sig);
        const auto b = random_class(rng, sig);
        REQUIRE(intersect(blowup_pullback(a, target), blowup_pullback(b, target)) ==
                intersect(a, b));
        // canonical classes stay compatible across the embedding
        REQUIRE(blowup_pullback(canonical_class(sig), target) +
                    DivisorClass::exceptional(target, target.exceptional_count()) ==
                canonical_class(target));
    }
}
