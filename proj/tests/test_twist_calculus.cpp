#include <doctest.h>

#include <random>

#include "veerkit/cable_glue.hpp"
#include "veerkit/errors.hpp"
#include "veerkit/twist_calculus.hpp"

using namespace veerkit;

namespace {

StandardFormMap stub_map(int sign) {
    return MapBuilder().fixed("S", 1, {"c"}).twist("t", "c", "d", sign).boundary("d").build();
}

StandardFormMap stack_map() {
    return MapBuilder()
        .boundary("b")
        .twist("t1", "b", "c1", 1)
        .fixed_annulus("f", "c1", "c2")
        .twist("t2", "c2", "c3", 1)
        .fixed_annulus("f2", "c3", "c4")
        .partial("p", "c4", "c5", Rational(1, 3))
        .periodic("P", 1, {"c5"}, 3, 1)
        .build();
}

}  // namespace

TEST_CASE("fdtc values") {
    CHECK(fdtc(stack_map(), "b") == Rational(7, 3));
    CHECK(fdtc(inverse(stack_map()), "b") == Rational(-7, 3));
    CHECK(fdtc(MapBuilder().fixed("S", 1, {"b"}).boundary("b").build(), "b") == Rational(0));
    auto cable = build_cable_boundary_model(1, 1);
    CHECK(fdtc(cable.map, cable.boundary) == Rational(1, 12));
}

TEST_CASE("fdtc refuses a boundary that is not fixed") {
    auto pa = MapBuilder()
                  .pseudo_anosov("Q", 1, {{"d", 2}})
                  .rotation("Q", "d", Rational(1, 2))
                  .boundary("d")
                  .build();
    CHECK_THROWS_AS(fdtc(pa, "d"), DomainError);
}

TEST_CASE("fdtc axioms on random maps") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        auto m = random_standard_form(rng);
        const auto& b = m.surface_boundary().front();
        if (!std::holds_alternative<MultitwistStub>(boundary_stub(m, b))) continue;
        for (std::int64_t n : {1, 2, 3, 5}) CHECK(fdtc_axioms_check(m, b, n));
        CHECK(fdtc(inverse(m), b) == -fdtc(m, b));
    }
}

TEST_CASE("veering verdicts") {
    CHECK(veering(stub_map(1)) == Verdict::RightVeering);
    CHECK(veering(stub_map(-1)) == Verdict::LeftVeering);
    CHECK(veering(MapBuilder().pseudo_anosov("Q", 1, {{"d", 2}}).boundary("d").build()) ==
          Verdict::Neither);
    CHECK(veering(MapBuilder().fixed("S", 1, {"b"}).boundary("b").build()) == Verdict::Identity);
}

TEST_CASE("fixed boundary piece whose other circles meet positive twists is right-veering") {
    auto m = MapBuilder()
                 .boundary("b")
                 .fixed("S0", 0, {"b", "x", "y"})
                 .twist("tx", "x", "x2", 1)
                 .fixed("A", 1, {"x2"})
                 .twist("ty", "y", "y2", 1)
                 .fixed("B", 1, {"y2"})
                 .build();
    REQUIRE(validate(m).empty());
    CHECK(right_veering_at(m, "b"));
    CHECK(veering(m) == Verdict::RightVeering);
    CHECK(veering(inverse(m)) == Verdict::LeftVeering);
}

TEST_CASE("veering refuses several boundary circles") {
    auto m = MapBuilder().fixed("S", 1, {"a", "c"}).twist("t", "c", "b", 1).boundary("a").boundary("b").build();
    CHECK_THROWS_AS(veering(m), DomainError);
}

TEST_CASE("inverse swaps right and left veering on random maps") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; ++t) {
        auto m = random_standard_form(rng);
        CHECK(veering(inverse(m)) == flip(veering(m)));
    }
}

TEST_CASE("verdict strings round-trip") {
    for (auto v : {Verdict::RightVeering, Verdict::LeftVeering, Verdict::Neither, Verdict::Identity,
                   Verdict::Unknown})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK_THROWS_AS(verdict_from_string("sideways"), InputError);
}
