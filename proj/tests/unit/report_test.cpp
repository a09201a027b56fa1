#include <gtest/gtest.h>

#include "gen.hpp"
#include "printing.hpp"
#include "shearscope/expr_io.hpp"
#include "shearscope/harness.hpp"
#include "shearscope/report.hpp"

using namespace shearscope;

TEST(Classify, Verdicts) {
    const auto gap = classify(parse_map("x - y^2 - y^5", "y"));
    EXPECT_EQ(gap.verdict, Verdict::shear);
    EXPECT_EQ(*gap.decomposition->decomposition.direction(), Direction(1, 0));
    EXPECT_EQ(*gap.inverse, parse_map("x + y^2 + y^5", "y"));

    const auto id = classify(PolyMap::identity());
    EXPECT_EQ(id.verdict, Verdict::linear);
    EXPECT_TRUE(id.decomposition->decomposition.is_trivial());

    const auto lin = classify(parse_map("2*x + y + 1", "x - 3"));
    EXPECT_EQ(lin.verdict, Verdict::linear);
    EXPECT_EQ(compose(lin.input, *lin.inverse), PolyMap::identity());

    const auto ndf = classify(parse_map("x + y^2", "y + (x + y^2)^2"));
    EXPECT_EQ(ndf.verdict, Verdict::jacobian_not_divergence_free);
    EXPECT_TRUE(ndf.is_jacobian);
    EXPECT_FALSE(ndf.decomposition);

    const auto nj = classify(parse_map("x + y^2", "y + x^2"));
    EXPECT_EQ(nj.verdict, Verdict::not_jacobian);
    EXPECT_FALSE(nj.inverse);

    const auto singular = classify(parse_map("x + y + x^2", "2*x + 2*y"));
    EXPECT_TRUE(singular.singular_linear_part);
    EXPECT_EQ(singular.verdict, Verdict::not_jacobian);
    EXPECT_FALSE(singular.normalized);
}

TEST(Classify, ParityConditionsOnlyForMapsInNormalForm) {
    EXPECT_EQ(classify(parse_map("x - y^2 - y^5", "y")).conditions.c2_i, true);
    EXPECT_FALSE(classify(parse_map("3*x - 4*y + (x-y)^2", "-2*x + y + (x-y)^2")).conditions.c2_i.has_value());
}

TEST(Classify, ShearVerdictIffNonemptyDecomposition) {
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
        const ShearDecomposition d = random_shear(rng, 4, 5);
        // Push the shear through a random invertible affine change so normalization has work to do.
        const LinearPart a(rng.uniform(2, 3), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(3, 5));
        const PolyMap phi = compose(reconstruct(d), a.as_map()) + PolyMap{Poly::constant(rng.uniform(-3, 3)), Poly{}};
        const auto r = classify(phi);
        ASSERT_EQ(r.verdict, Verdict::shear);
        EXPECT_FALSE(r.decomposition->decomposition.epsilons().empty());
        EXPECT_EQ(reconstruct(r.decomposition->decomposition), r.normalized->psi);
        EXPECT_EQ(compose(phi, *r.inverse), PolyMap::identity());
        EXPECT_EQ(compose(*r.inverse, phi), PolyMap::identity());
    }
}

TEST(Report, JsonIsDeterministicAndExact) {
    const PolyMap m = parse_map("3*x - 4*y + (x-y)^2", "-2*x + y + (x-y)^2");
    const std::string a = to_json(classify(m)).dump(2), b = to_json(classify(m)).dump(2);
    EXPECT_EQ(a, b);
    const auto doc = to_json(classify(m));
    EXPECT_EQ(doc["shear"]["epsilons"][0]["epsilon"], "1/25");
    EXPECT_EQ(doc["linear_part"]["determinant"], "-5");
    EXPECT_EQ(doc["verdict"], "shear");
    for (const char* key : {"input", "translation", "linear_part", "determinant", "divergence", "verdict", "shear",
                            "inverse", "normal_form", "conditions"})
        EXPECT_TRUE(doc.contains(key)) << key;
}

TEST(Report, LinearMapHasNoDirectionMarker) {
    const auto doc = to_json(classify(PolyMap::identity()));
    EXPECT_EQ(doc["shear"]["linear_map_no_direction"], true);
    EXPECT_EQ(doc["verdict"], "linear");
}

TEST(Report, TextMentionsVerdict) {
    const std::string text = to_text(classify(parse_map("x - y^2 - y^5", "y")));
    EXPECT_NE(text.find("verdict:     shear"), std::string::npos);
    EXPECT_NE(text.find("g(u) = -u^2 + u^5"), std::string::npos);
}
