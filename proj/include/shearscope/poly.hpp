#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shearscope/rational.hpp"

namespace shearscope {

/// x^ex * y^ey.
struct Monomial {
    std::uint32_t ex = 0;
    std::uint32_t ey = 0;

    std::uint32_t degree() const { return ex + ey; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first, then higher power of x first, so
/// that x^2, x*y, y^2 appear in that order.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.ex > b.ex;
    }
};

enum class Var { x, y };

/// Sparse bivariate polynomial over the rationals. The term map never holds a
/// zero coefficient, so structural equality is mathematical equality.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Poly() = default;
    Poly(std::initializer_list<std::pair<Monomial, Rational>> terms);

    static Poly constant(const Rational& c);
    static Poly term(const Rational& c, std::uint32_t ex, std::uint32_t ey);
    static Poly x() { return term(1, 1, 0); }
    static Poly y() { return term(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// At most the (0,0) monomial is present.
    bool is_constant() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({0, 0}); }

    /// Largest total degree; empty for the zero polynomial.
    std::optional<std::uint32_t> degree() const;
    /// Smallest total degree; empty for the zero polynomial.
    std::optional<std::uint32_t> order() const;
    std::uint32_t degree_in(Var v) const;
    bool is_homogeneous() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    TermMap terms_;
};

/// The pair (P, Q) viewed as the map (x, y) -> (P(x, y), Q(x, y)).
struct PolyMap {
    Poly P;
    Poly Q;

    static PolyMap identity() { return {Poly::x(), Poly::y()}; }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

struct HomogeneousComponent {
    std::uint32_t degree;
    Poly component;

    friend bool operator==(const HomogeneousComponent&, const HomogeneousComponent&) = default;
};

Poly add(const Poly& a, const Poly& b);
Poly negate(const Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& base, unsigned exponent);
Poly partial(const Poly& p, Var v);
Rational evaluate(const Poly& p, const Rational& x, const Rational& y);

/// Nonzero homogeneous pieces, ascending by degree; they sum to p.
std::vector<HomogeneousComponent> homogeneous_components(const Poly& p);
/// The degree-d piece of p (possibly zero).
Poly homogeneous_part(const Poly& p, std::uint32_t d);

/// Substitutes (x, y) := (G.P, G.Q) into f, Horner style in each variable.
Poly substitute(const Poly& f, const PolyMap& g);
/// outer o inner.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

PolyMap operator+(const PolyMap& a, const PolyMap& b);
PolyMap operator-(const PolyMap& a, const PolyMap& b);

}  // namespace shearscope
