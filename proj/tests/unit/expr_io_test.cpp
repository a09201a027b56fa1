#include <gtest/gtest.h>

#include <string>

#include "gen.hpp"
#include "printing.hpp"
#include "shearscope/expr_io.hpp"
#include "shearscope/harness.hpp"

using namespace shearscope;

namespace {

ParseError error_of(const std::string& src, const ParseOptions& opts = {}) {
    try {
        parse_poly(src, opts);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for '" << src << "'";
    return ParseError("", 0, 0);
}

Poly monomials(std::initializer_list<std::tuple<long, long, std::uint32_t, std::uint32_t>> terms) {
    Poly p;
    for (const auto& [n, d, ex, ey] : terms) p.add_term({ex, ey}, Rational(n, d));
    return p;
}

}  // namespace

TEST(Parse, ExpandsBinomial) {
    EXPECT_EQ(parse_poly("x + (x-y)^2"), monomials({{1, 1, 1, 0}, {1, 1, 2, 0}, {-2, 1, 1, 1}, {1, 1, 0, 2}}));
}

TEST(Parse, GapExamplePolynomial) {
    EXPECT_EQ(parse_poly("x^3 + y^3 + x^2*y^2 + y^7"),
              monomials({{1, 1, 3, 0}, {1, 1, 0, 3}, {1, 1, 2, 2}, {1, 1, 0, 7}}));
}

TEST(Parse, DoublePlusFailsAtSecondPlus) {
    const ParseError e = error_of("x + + y");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
}

TEST(Parse, MapExamples) {
    const PolyMap shear = parse_map("3*x - 4*y + (x-y)^2", "-2*x + y + (x-y)^2");
    EXPECT_EQ(shear.P, monomials({{3, 1, 1, 0}, {-4, 1, 0, 1}, {1, 1, 2, 0}, {-2, 1, 1, 1}, {1, 1, 0, 2}}));
    EXPECT_EQ(shear.Q, monomials({{-2, 1, 1, 0}, {1, 1, 0, 1}, {1, 1, 2, 0}, {-2, 1, 1, 1}, {1, 1, 0, 2}}));
    EXPECT_EQ(parse_map("x", "y"), PolyMap::identity());
    const PolyMap gap = parse_map("x - y^2 - y^5", "y");
    EXPECT_EQ(gap.P, monomials({{1, 1, 1, 0}, {-1, 1, 0, 2}, {-1, 1, 0, 5}}));
    EXPECT_EQ(gap.Q, Poly::y());
}

TEST(Parse, MapErrorsNameTheComponent) {
    try {
        parse_map("x", "y^");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.component(), "Q");
        EXPECT_EQ(std::string(e.what()).rfind("Q: line 1, column 3", 0), 0u) << e.what();
    }
}

TEST(Parse, Precedence) {
    EXPECT_EQ(parse_poly("-x^2"), monomials({{-1, 1, 2, 0}}));
    EXPECT_EQ(parse_poly("2^3^2*x"), monomials({{512, 1, 1, 0}}));
    EXPECT_EQ(parse_poly("1/2*x - 3/4"), monomials({{1, 2, 1, 0}, {-3, 4, 0, 0}}));
    EXPECT_EQ(parse_poly("(x)^0"), Poly::constant(1));
    EXPECT_EQ(parse_poly("  x\n  + y "), Poly::x() + Poly::y());
}

TEST(Parse, RejectsBadExponents) {
    EXPECT_NO_THROW(parse_poly("x^64"));
    EXPECT_THROW(parse_poly("x^65"), ParseError);
    EXPECT_NO_THROW(parse_poly("x^70", ParseOptions{.max_exponent = 70}));
    EXPECT_THROW(parse_poly("x^y"), ParseError);
    EXPECT_THROW(parse_poly("x^(1/2)"), ParseError);
    EXPECT_THROW(parse_poly("x^-1"), ParseError);
    EXPECT_THROW(parse_poly("(x^64)^64"), ParseError);
}

TEST(Parse, ReportsLineAndColumn) {
    const ParseError e = error_of("x +\n  y * )");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("2x"), ParseError);
    EXPECT_THROW(parse_poly("x y"), ParseError);
    EXPECT_THROW(parse_poly("z"), ParseError);
    EXPECT_THROW(parse_poly("1/0"), ParseError);
    EXPECT_THROW(parse_poly("(x + y"), ParseError);
}

TEST(Parse, DeepNestingIsAnErrorNotACrash) {
    EXPECT_THROW(parse_poly(std::string(5000, '(') + "x" + std::string(5000, ')')), ParseError);
    EXPECT_THROW(parse_poly(std::string(5000, '-') + "x"), ParseError);
}

TEST(Format, Examples) {
    EXPECT_EQ(format_poly(Poly{}), "0");
    EXPECT_EQ(format_poly(parse_poly("(x-y)^2")), "x^2 - 2*x*y + y^2");
    EXPECT_EQ(format_poly(Poly::term(Rational(1, 2), 1, 0)), "1/2*x");
    EXPECT_EQ(format_poly(parse_poly("-x - 1/3 + 2*x^2*y")), "-1/3 - x + 2*x^2*y");
    EXPECT_EQ(format_univariate(parse_poly("-x^2 + x^5"), 'u'), "-u^2 + u^5");
}

TEST(Format, RoundTripsRandomPolynomials) {
    gen::SplitMix g(99);
    for (int k = 0; k < 2000; ++k) {
        const Poly p = gen::poly(g, 0, 12, 8, 1000);
        const std::string text = format_poly(p);
        EXPECT_EQ(parse_poly(text), p) << text;
        EXPECT_EQ(format_poly(p), text);
    }
}

TEST(Parse, FuzzedInputYieldsPolyOrParseError) {
    const std::string alphabet = "xy0123456789+-*/^() \n\t.z";
    Rng rng(5);
    for (int k = 0; k < 3000; ++k) {
        const auto len = static_cast<std::size_t>(rng.uniform(0, 40));
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += alphabet[rng.uniform(0, alphabet.size() - 1)];
        try {
            parse_poly(s);
        } catch (const ParseError&) {
        }
    }
}
