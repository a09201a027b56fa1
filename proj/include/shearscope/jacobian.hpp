#pragma once

#include <stdexcept>
#include <utility>

#include "shearscope/poly.hpp"

namespace shearscope {

/// The linear map (x, y) -> (a x + b y, c x + d y), i.e. J(0, 0).
class LinearPart {
public:
    LinearPart(Rational a, Rational b, Rational c, Rational d);

    static LinearPart identity() { return {1, 0, 0, 1}; }
    /// Jacobian matrix of m at the origin.
    static LinearPart of(const PolyMap& m);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    const Rational& determinant() const { return det_; }

    bool is_identity() const { return *this == identity(); }
    /// Throws SingularLinearPart when the determinant vanishes.
    LinearPart inverse() const;
    PolyMap as_map() const;

    friend bool operator==(const LinearPart&, const LinearPart&) = default;

private:
    Rational a_, b_, c_, d_, det_;
};

class SingularLinearPart : public std::runtime_error {
public:
    SingularLinearPart() : std::runtime_error("linear part at the origin is singular (ad - bc = 0)") {}
};

/// An arithmetic invariant failed; never a property of the input.
class InternalVerificationFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Which side the inverse linear part is composed on during normalization.
enum class NormalizationSide {
    right,  ///< psi = (m - m(0,0)) o A^{-1}
    left,   ///< psi = A^{-1} o (m - m(0,0))
};

struct NormalizedMap {
    PolyMap psi;
    LinearPart linear = LinearPart::identity();
    std::pair<Rational, Rational> translation{0, 0};
    NormalizationSide side = NormalizationSide::right;

    /// psi - identity.
    PolyMap nonlinear() const;
    /// Rebuilds the map that was normalized.
    PolyMap reconstruct() const;
};

template <typename T>
struct Witnessed {
    bool holds;
    T witness;
};

Poly jacobian_determinant(const PolyMap& m);
/// Holds iff det J is a nonzero constant; the witness is det J either way.
Witnessed<Poly> is_jacobian_map(const PolyMap& m);

Poly divergence(const Poly& p, const Poly& q);
Poly determinant_like_part(const Poly& p, const Poly& q);

/// Translates m to fix the origin and removes its linear part. Throws
/// SingularLinearPart if J(0,0) is not invertible.
NormalizedMap normalize(const PolyMap& m, NormalizationSide side = NormalizationSide::right);

struct DivergenceFreeWitness {
    Poly determinant;
    Poly divergence;
};
Witnessed<DivergenceFreeWitness> is_divergence_free_jacobian(const NormalizedMap& n);

}  // namespace shearscope
