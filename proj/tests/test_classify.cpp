#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "veerkit/classify.hpp"
#include "veerkit/corpus.hpp"

using namespace veerkit;

namespace {

StandardFormMap corpus_map(const std::string& name) {
    return io::map_from_json(io::load(default_corpus_dir() / (name + ".map.json")));
}

}  // namespace

TEST_CASE("s3-like detection") {
    CHECK(s3_like(fixtures::figure8()));
    CHECK(s3_like(fixtures::unknot()));
    auto shifted = fixtures::shift(fixtures::figure8(), 0, 2);
    CHECK_FALSE(s3_like(shifted));
    auto labelled = fixtures::figure8();
    for (auto& g : labelled.generators) g.spinc = "s";
    CHECK_FALSE(s3_like(labelled));
}

TEST_CASE("figure-eight classification") {
    auto c = classify_fibered(fixtures::figure8());
    CHECK(c.b == 1);
    CHECK(c.b_mirror == 1);
    CHECK(c.monodromy_verdict == Verdict::Neither);
    CHECK(c.tau == 0);
    CHECK(c.thin == true);
    CHECK(c.persistently_foliar == true);
    CHECK(c.surgery_constraint == SurgeryConstraint::QBound2);
    CHECK_FALSE(c.inconsistent);
}

TEST_CASE("trefoil classifications") {
    auto r = classify_fibered(fixtures::right_trefoil());
    CHECK_FALSE(r.b.has_value());
    CHECK(r.monodromy_verdict == Verdict::RightVeering);
    CHECK(r.tau == 1);
    CHECK(r.surgery_constraint == SurgeryConstraint::NonnegativeInterval);
    CHECK_FALSE(r.persistently_foliar.has_value());

    auto l = classify_fibered(fixtures::left_trefoil());
    CHECK(l.b == 1);
    CHECK_FALSE(l.b_mirror.has_value());
    CHECK(l.monodromy_verdict == Verdict::LeftVeering);
    CHECK(l.surgery_constraint == SurgeryConstraint::NonpositiveInterval);
}

TEST_CASE("unknot has both b values infinite and is the identity") {
    auto u = classify_fibered(fixtures::unknot());
    CHECK_FALSE(u.b.has_value());
    CHECK_FALSE(u.b_mirror.has_value());
    CHECK(u.monodromy_verdict == Verdict::Identity);
    CHECK_FALSE(u.inconsistent);
}

TEST_CASE("non-thin complexes make no foliation claim") {
    auto t34 = fixtures::staircase({1, 2, 2, 1});
    auto c = classify_fibered(t34);
    CHECK(c.thin == false);
    CHECK(c.surgery_constraint == SurgeryConstraint::NonnegativeInterval);
    CHECK_FALSE(c.persistently_foliar.has_value());
}

TEST_CASE("random thin knots with b = 1 on both sides are neither") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 40; ++t) {
        auto c = classify_fibered(fixtures::random_neither_knot(rng, 1 + t % 4));
        CHECK(c.monodromy_verdict == Verdict::Neither);
        CHECK(c.persistently_foliar == true);
        CHECK(c.surgery_constraint == SurgeryConstraint::QBound2);
    }
}

TEST_CASE("verdict routes agree on paired data") {
    auto f8 = consistency_audit(fixtures::figure8(), corpus_map("figure8"));
    CHECK(f8.agree);
    CHECK(f8.standard_form == Verdict::Neither);
    CHECK(f8.symplectic->difference == 0);

    auto rt = consistency_audit(fixtures::right_trefoil(), corpus_map("right_trefoil"));
    CHECK(rt.agree);
    CHECK(rt.symplectic->verdict == Verdict::RightVeering);

    auto lt = consistency_audit(fixtures::left_trefoil(), corpus_map("left_trefoil"));
    CHECK(lt.agree);
    CHECK(lt.symplectic->difference == -2);

    auto bad = consistency_audit(fixtures::figure8(), corpus_map("right_trefoil"));
    CHECK_FALSE(bad.agree);

    auto alone = consistency_audit(fixtures::figure8(), std::nullopt);
    CHECK(alone.agree);
    CHECK_FALSE(alone.standard_form.has_value());
}

TEST_CASE("constraint strings") {
    CHECK(std::string(to_string(SurgeryConstraint::None)) == "none");
    CHECK(std::string(to_string(SurgeryConstraint::NonnegativeInterval)) == "[0,4g]");
    CHECK(std::string(to_string(SurgeryConstraint::NonpositiveInterval)) == "[-4g,0]");
    CHECK(std::string(to_string(SurgeryConstraint::QBound2)) == "|q|<=2");
}
