#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shearscope/jacobian.hpp"
#include "shearscope/poly.hpp"

namespace shearscope {

/// Direction (alpha, beta) of the linear form L = beta*x - alpha*y.
///
/// Stored as the canonical representative of its projective class: coprime
/// integers with beta > 0, or beta == 0 and alpha == 1.
class Direction {
public:
    /// Canonicalizes an arbitrary nonzero rational pair. Throws
    /// std::invalid_argument for (0, 0).
    Direction(const Rational& alpha, const Rational& beta);

    /// The factor t with (alpha, beta) == t * Direction(alpha, beta).
    static Rational scale_of(const Rational& alpha, const Rational& beta);

    const Integer& alpha() const { return alpha_; }
    const Integer& beta() const { return beta_; }
    Rational alpha_r() const { return Rational(alpha_); }
    Rational beta_r() const { return Rational(beta_); }

    /// beta*x - alpha*y.
    Poly linear_form() const;

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    Integer alpha_;
    Integer beta_;
};

class NotHomogeneous : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BothZero : public std::invalid_argument {
public:
    BothZero() : std::invalid_argument("both homogeneous components are zero") {}
};

struct LinearFormPower {
    Rational h;
    Direction direction;
};

/// Writes a nonzero homogeneous r of degree j as h * (beta*x - alpha*y)^j
/// with a canonical direction, or returns nullopt if r is not the j-th power
/// of a real linear form.
std::optional<LinearFormPower> recognize_power_of_linear_form(const Poly& r, unsigned j);

/// p = a * L^degree, q = b * L^degree with (a, b) parallel to (alpha, beta).
struct HomogeneousShearPart {
    unsigned degree;
    Direction direction;
    Rational a;
    Rational b;
};

std::optional<HomogeneousShearPart> decompose_homogeneous(const Poly& p, const Poly& q, unsigned j);

/// Map x + sum eps_i * alpha * L^i, y + sum eps_i * beta * L^i.
class ShearDecomposition {
public:
    /// The trivial decomposition: no nonlinear terms, no direction.
    ShearDecomposition() = default;
    /// Missing degrees are zero; trailing zeros are dropped.
    ShearDecomposition(Direction direction, const std::map<unsigned, Rational>& epsilons);

    const std::optional<Direction>& direction() const { return direction_; }
    /// epsilons()[k] is eps_{k+2}; the last entry is nonzero.
    const std::vector<Rational>& epsilons() const { return epsilons_; }
    Rational epsilon(unsigned degree) const;
    /// Highest degree with a nonzero coefficient; 1 for the trivial decomposition.
    unsigned degree() const { return static_cast<unsigned>(epsilons_.size()) + 1; }
    bool is_trivial() const { return epsilons_.empty(); }

    ShearDecomposition negated() const;

    friend bool operator==(const ShearDecomposition&, const ShearDecomposition&) = default;

private:
    std::optional<Direction> direction_;
    std::vector<Rational> epsilons_;
};

struct DecompositionOutcome {
    enum class Status {
        shear,
        linear_no_direction,  ///< nonlinear part is zero
        not_shear,
    };

    Status status;
    ShearDecomposition decomposition;
    /// Why decomposition failed; empty on success.
    std::string reason;

    bool succeeded() const { return status != Status::not_shear; }
};

/// Expects psi to fix the origin with identity linear part
/// (std::invalid_argument otherwise).
DecompositionOutcome decompose_map(const NormalizedMap& n);

PolyMap reconstruct(const ShearDecomposition& d);

/// Polynomial inverse of reconstruct(d), checked by composing on both sides.
PolyMap shear_inverse(const ShearDecomposition& d);

/// Inverse of the map n was normalized from, given the decomposition of n.psi.
PolyMap invert_normalized(const NormalizedMap& n, const ShearDecomposition& d);

/// T o psi o T^{-1} = (u, v + g(u)) with T = (beta*x - alpha*y, alpha*x + beta*y).
/// The shear is recorded as (u, v + g(u)), i.e. g = -f for the form (u, v - f(u)).
struct ShearNormalForm {
    LinearPart change_of_variables = LinearPart::identity();
    /// g[k] is the coefficient of u^k.
    std::vector<Rational> g;

    /// g as a polynomial in x (standing for u).
    Poly g_poly() const;
};

ShearNormalForm conjugate_to_normal_form(const ShearDecomposition& d);

}  // namespace shearscope
