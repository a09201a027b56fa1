#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>

#include "shearscope/poly.hpp"

namespace shearscope {

/// Differences of total degrees over pairs of distinct monomials. Empty for
/// polynomials with fewer than two monomials.
using GapSet = std::set<std::uint32_t>;

GapSet gap_set(const Poly& p);

/// For every monomial M of p, deg(M) - 1 is not a gap of q.
bool gap_condition(const Poly& p, const Poly& q);
bool symmetric_gap_condition(const Poly& p, const Poly& q);

/// Each flag holds when every monomial has the property; all are true for 0.
struct ParityClass {
    bool even = true;
    bool odd = true;
    bool x_even = true;
    bool x_odd = true;
    bool y_even = true;
    bool y_odd = true;

    friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

ParityClass parity_class(const Poly& p);

class OrderTooLow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ConditionsReport {
    /// Empty when o(p) or o(q) is undefined (a zero part).
    std::optional<bool> c1_i;
    bool c1_ii = false;
    bool c1_iii = false;
    bool c1_iv = false;
    /// Empty when the map is not of the form (x + p, y + q).
    std::optional<bool> c2_i;
    std::optional<bool> c2_ii;

    std::optional<std::uint32_t> degree_p, order_p, degree_q, order_q;
    GapSet gaps_p, gaps_q;

    bool any_corollary1() const { return c1_i.value_or(false) || c1_ii || c1_iii || c1_iv; }
    bool any_corollary2() const { return c2_i.value_or(false) || c2_ii.value_or(false); }
};

/// Fills the c1_* fields and the degree/order/gap data. p and q are the
/// nonlinear parts; throws OrderTooLow if a nonzero one has order <= 1.
ConditionsReport corollary1_conditions(const Poly& p, const Poly& q);
/// Fills the c2_* fields (and the shared degree/order/gap data).
ConditionsReport corollary2_conditions(const Poly& p, const Poly& q);
/// Both of the above.
ConditionsReport all_conditions(const Poly& p, const Poly& q);

}  // namespace shearscope
