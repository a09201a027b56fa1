#include "shearscope/shear.hpp"

namespace shearscope {

namespace {

struct CanonicalPair {
    Integer alpha;
    Integer beta;
};

CanonicalPair canonical_pair(const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() && beta.is_zero()) throw std::invalid_argument("direction (0, 0)");
    Integer den;
    mpz_lcm(den.get_mpz_t(), alpha.raw().get_den_mpz_t(), beta.raw().get_den_mpz_t());
    Integer a = alpha.numerator() * (den / alpha.denominator());
    Integer b = beta.numerator() * (den / beta.denominator());
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

}  // namespace

Direction::Direction(const Rational& alpha, const Rational& beta) {
    auto [a, b] = canonical_pair(alpha, beta);
    alpha_ = std::move(a);
    beta_ = std::move(b);
}

Rational Direction::scale_of(const Rational& alpha, const Rational& beta) {
    const auto [a, b] = canonical_pair(alpha, beta);
    return a != 0 ? alpha / Rational(a) : beta / Rational(b);
}

Poly Direction::linear_form() const {
    Poly L;
    L.add_term({1, 0}, Rational(beta_));
    L.add_term({0, 1}, -Rational(alpha_));
    return L;
}

std::optional<LinearFormPower> recognize_power_of_linear_form(const Poly& r, unsigned j) {
    if (r.is_zero()) throw std::invalid_argument("cannot recognize the zero polynomial");
    if (j == 0) throw std::invalid_argument("linear form powers need degree >= 1");
    if (!r.is_homogeneous() || *r.degree() != j)
        throw NotHomogeneous("expected a homogeneous polynomial of degree " + std::to_string(j));

    // r = sum_k c_k x^(j-k) y^k.
    auto c = [&](unsigned k) { return r.coefficient({j - k, k}); };

    Rational raw_alpha, raw_beta, h;
    if (!c(0).is_zero()) {
        // r = c_0 (x + t y)^j
        h = c(0);
        const Rational t = c(1) / (Rational(static_cast<std::int64_t>(j)) * h);
        Rational t_pow = 1;
        for (unsigned k = 0; k <= j; ++k) {
            if (c(k) != h * Rational(binomial(j, k)) * t_pow) return std::nullopt;
            t_pow *= t;
        }
        raw_alpha = -t;
        raw_beta = 1;
    } else {
        // Only c_j y^j = c_j (-1)^j (-y)^j can survive.
        if (r.size() != 1 || c(j).is_zero()) return std::nullopt;
        h = j % 2 == 0 ? c(j) : -c(j);
        raw_alpha = 1;
        raw_beta = 0;
    }
    const Rational tau = Direction::scale_of(raw_alpha, raw_beta);
    return LinearFormPower{h * pow(tau, j), Direction(raw_alpha, raw_beta)};
}

std::optional<HomogeneousShearPart> decompose_homogeneous(const Poly& p, const Poly& q, unsigned j) {
    if (p.is_zero() && q.is_zero()) throw BothZero();

    std::optional<LinearFormPower> from_p, from_q;
    if (!p.is_zero()) {
        from_p = recognize_power_of_linear_form(p, j);
        if (!from_p) return std::nullopt;
    }
    if (!q.is_zero()) {
        from_q = recognize_power_of_linear_form(q, j);
        if (!from_q) return std::nullopt;
    }
    if (from_p && from_q && !(from_p->direction == from_q->direction)) return std::nullopt;

    const Direction dir = from_p ? from_p->direction : from_q->direction;
    const Rational a = from_p ? from_p->h : Rational(0);
    const Rational b = from_q ? from_q->h : Rational(0);
    // Divergence of (a L^j, b L^j) is j L^(j-1) (a beta - b alpha).
    if (a * dir.beta_r() != b * dir.alpha_r()) return std::nullopt;
    return HomogeneousShearPart{j, dir, a, b};
}

ShearDecomposition::ShearDecomposition(Direction direction, const std::map<unsigned, Rational>& epsilons) {
    for (const auto& [deg, eps] : epsilons) {
        if (deg < 2) throw std::invalid_argument("shear coefficients start at degree 2");
        if (eps.is_zero()) continue;
        if (epsilons_.size() < deg - 1) epsilons_.resize(deg - 1, Rational(0));
        epsilons_[deg - 2] = eps;
    }
    if (!epsilons_.empty()) direction_ = std::move(direction);
}

Rational ShearDecomposition::epsilon(unsigned degree) const {
    if (degree < 2 || degree - 2 >= epsilons_.size()) return 0;
    return epsilons_[degree - 2];
}

ShearDecomposition ShearDecomposition::negated() const {
    ShearDecomposition out = *this;
    for (auto& e : out.epsilons_) e = -e;
    return out;
}

DecompositionOutcome decompose_map(const NormalizedMap& n) {
    if (n.psi.P.constant_term() != Rational(0) || n.psi.Q.constant_term() != Rational(0) ||
        !LinearPart::of(n.psi).is_identity())
        throw std::invalid_argument("decompose_map expects a map fixing the origin with identity linear part");

    const PolyMap rest = n.nonlinear();
    const unsigned top = std::max(rest.P.degree().value_or(0), rest.Q.degree().value_or(0));

    std::optional<Direction> direction;
    std::map<unsigned, Rational> epsilons;
    for (unsigned j = 2; j <= top; ++j) {
        const Poly p = homogeneous_part(rest.P, j);
        const Poly q = homogeneous_part(rest.Q, j);
        if (p.is_zero() && q.is_zero()) continue;
        const auto part = decompose_homogeneous(p, q, j);
        if (!part)
            return {DecompositionOutcome::Status::not_shear, {},
                    "degree " + std::to_string(j) + " is not a shear pair"};
        if (direction && !(*direction == part->direction))
            return {DecompositionOutcome::Status::not_shear, {},
                    "degree " + std::to_string(j) + " uses a different direction"};
        direction = part->direction;
        epsilons[j] = direction->alpha() != 0 ? part->a / direction->alpha_r() : part->b / direction->beta_r();
    }
    if (!direction) return {DecompositionOutcome::Status::linear_no_direction, {}, {}};
    return {DecompositionOutcome::Status::shear, ShearDecomposition(*direction, epsilons), {}};
}

PolyMap reconstruct(const ShearDecomposition& d) {
    PolyMap out = PolyMap::identity();
    if (d.is_trivial()) return out;
    const Direction& dir = *d.direction();
    const Poly L = dir.linear_form();
    Poly L_pow = L;
    Poly sum;
    for (unsigned i = 2; i <= d.degree(); ++i) {
        L_pow = L_pow * L;
        sum += L_pow * d.epsilon(i);
    }
    out.P += sum * dir.alpha_r();
    out.Q += sum * dir.beta_r();
    return out;
}

namespace {

void verify_inverse_pair(const PolyMap& f, const PolyMap& g) {
    if (compose(f, g) != PolyMap::identity() || compose(g, f) != PolyMap::identity())
        throw InternalVerificationFailed("computed inverse does not compose to the identity");
}

}  // namespace

PolyMap shear_inverse(const ShearDecomposition& d) {
    // beta*P - alpha*Q = beta*x - alpha*y, so negating every eps inverts the map.
    PolyMap inv = reconstruct(d.negated());
    verify_inverse_pair(reconstruct(d), inv);
    return inv;
}

PolyMap invert_normalized(const NormalizedMap& n, const ShearDecomposition& d) {
    const PolyMap psi_inv = shear_inverse(d);
    const PolyMap lin_inv = n.linear.inverse().as_map();
    const PolyMap untranslate{Poly::x() - Poly::constant(n.translation.first),
                              Poly::y() - Poly::constant(n.translation.second)};
    const PolyMap inv = n.side == NormalizationSide::right
                            ? compose(lin_inv, compose(psi_inv, untranslate))
                            : compose(psi_inv, compose(lin_inv, untranslate));
    verify_inverse_pair(n.reconstruct(), inv);
    return inv;
}

Poly ShearNormalForm::g_poly() const {
    Poly out;
    for (std::size_t k = 0; k < g.size(); ++k) out.add_term({static_cast<std::uint32_t>(k), 0}, g[k]);
    return out;
}

ShearNormalForm conjugate_to_normal_form(const ShearDecomposition& d) {
    ShearNormalForm nf;
    if (!d.is_trivial()) {
        const Direction& dir = *d.direction();
        const Rational alpha = dir.alpha_r(), beta = dir.beta_r();
        nf.change_of_variables = LinearPart(beta, -alpha, alpha, beta);
        const Rational norm = alpha * alpha + beta * beta;
        nf.g.assign(d.degree() + 1, Rational(0));
        for (unsigned i = 2; i <= d.degree(); ++i) nf.g[i] = norm * d.epsilon(i);
    }

    const PolyMap T = nf.change_of_variables.as_map();
    const PolyMap T_inv = nf.change_of_variables.inverse().as_map();
    const PolyMap conjugated = compose(T, compose(reconstruct(d), T_inv));
    if (conjugated != PolyMap{Poly::x(), Poly::y() + nf.g_poly()})
        throw InternalVerificationFailed("conjugated map is not (u, v + g(u))");
    return nf;
}

}  // namespace shearscope
