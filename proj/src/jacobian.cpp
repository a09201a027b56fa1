#include "shearscope/jacobian.hpp"

namespace shearscope {

LinearPart::LinearPart(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), det_(a_ * d_ - b_ * c_) {}

LinearPart LinearPart::of(const PolyMap& m) {
    return {m.P.coefficient({1, 0}), m.P.coefficient({0, 1}), m.Q.coefficient({1, 0}),
            m.Q.coefficient({0, 1})};
}

LinearPart LinearPart::inverse() const {
    if (det_.is_zero()) throw SingularLinearPart();
    return {d_ / det_, -b_ / det_, -c_ / det_, a_ / det_};
}

PolyMap LinearPart::as_map() const {
    Poly P, Q;
    P.add_term({1, 0}, a_);
    P.add_term({0, 1}, b_);
    Q.add_term({1, 0}, c_);
    Q.add_term({0, 1}, d_);
    return {P, Q};
}

PolyMap NormalizedMap::nonlinear() const { return psi - PolyMap::identity(); }

PolyMap NormalizedMap::reconstruct() const {
    const PolyMap shifted = side == NormalizationSide::right ? compose(psi, linear.as_map())
                                                             : compose(linear.as_map(), psi);
    return shifted + PolyMap{Poly::constant(translation.first), Poly::constant(translation.second)};
}

Poly jacobian_determinant(const PolyMap& m) {
    return partial(m.P, Var::x) * partial(m.Q, Var::y) - partial(m.P, Var::y) * partial(m.Q, Var::x);
}

Witnessed<Poly> is_jacobian_map(const PolyMap& m) {
    Poly det = jacobian_determinant(m);
    const bool holds = det.is_constant() && !det.is_zero();
    return {holds, std::move(det)};
}

Poly divergence(const Poly& p, const Poly& q) { return partial(p, Var::x) + partial(q, Var::y); }

Poly determinant_like_part(const Poly& p, const Poly& q) { return jacobian_determinant({p, q}); }

NormalizedMap normalize(const PolyMap& m, NormalizationSide side) {
    NormalizedMap out;
    out.side = side;
    out.translation = {m.P.constant_term(), m.Q.constant_term()};
    out.linear = LinearPart::of(m);
    const PolyMap inv = out.linear.inverse().as_map();
    const PolyMap shifted = m - PolyMap{Poly::constant(out.translation.first),
                                        Poly::constant(out.translation.second)};
    out.psi = side == NormalizationSide::right ? compose(shifted, inv) : compose(inv, shifted);

    const PolyMap rest = out.nonlinear();
    for (const Poly* p : {&rest.P, &rest.Q})
        if (p->order().value_or(2) < 2)
            throw InternalVerificationFailed("normalized map keeps terms of degree < 2");
    return out;
}

Witnessed<DivergenceFreeWitness> is_divergence_free_jacobian(const NormalizedMap& n) {
    auto jac = is_jacobian_map(n.psi);
    const PolyMap rest = n.nonlinear();
    Poly div = divergence(rest.P, rest.Q);
    const bool holds = jac.holds && div.is_zero();
    return {holds, {std::move(jac.witness), std::move(div)}};
}

}  // namespace shearscope
