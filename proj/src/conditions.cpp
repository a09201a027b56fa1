#include "shearscope/conditions.hpp"

#include <map>
#include <string>

namespace shearscope {

GapSet gap_set(const Poly& p) {
    // degree -> number of monomials of that degree
    std::map<std::uint32_t, std::size_t> degrees;
    for (const auto& [m, c] : p.terms()) ++degrees[m.degree()];

    GapSet gaps;
    for (auto it = degrees.begin(); it != degrees.end(); ++it) {
        if (it->second > 1) gaps.insert(0);
        for (auto jt = std::next(it); jt != degrees.end(); ++jt) gaps.insert(jt->first - it->first);
    }
    return gaps;
}

bool gap_condition(const Poly& p, const Poly& q) {
    const GapSet gaps = gap_set(q);
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == 0) continue;  // d(M) - 1 = -1 is never a gap
        if (gaps.contains(m.degree() - 1)) return false;
    }
    return true;
}

bool symmetric_gap_condition(const Poly& p, const Poly& q) { return gap_condition(p, q) && gap_condition(q, p); }

ParityClass parity_class(const Poly& p) {
    ParityClass f;
    for (const auto& [m, c] : p.terms()) {
        const bool deg_even = m.degree() % 2 == 0;
        f.even = f.even && deg_even;
        f.odd = f.odd && !deg_even;
        f.x_even = f.x_even && m.ex % 2 == 0;
        f.x_odd = f.x_odd && m.ex % 2 == 1;
        f.y_even = f.y_even && m.ey % 2 == 0;
        f.y_odd = f.y_odd && m.ey % 2 == 1;
    }
    return f;
}

namespace {

void require_order(const Poly& p, const char* name) {
    if (!p.is_zero() && *p.order() <= 1)
        throw OrderTooLow(std::string(name) + " has order " + std::to_string(*p.order()) +
                          "; expected nonlinear part with order >= 2");
}

ConditionsReport shared(const Poly& p, const Poly& q) {
    require_order(p, "p");
    require_order(q, "q");
    ConditionsReport r;
    r.degree_p = p.degree();
    r.order_p = p.order();
    r.degree_q = q.degree();
    r.order_q = q.order();
    r.gaps_p = gap_set(p);
    r.gaps_q = gap_set(q);
    return r;
}

void fill_corollary1(ConditionsReport& r, const Poly& p, const Poly& q) {
    if (r.order_p && r.order_q)
        r.c1_i = std::max(*r.degree_p, *r.degree_q) + 1 < *r.order_p + *r.order_q;
    const ParityClass fp = parity_class(p), fq = parity_class(q);
    r.c1_ii = fp.even && fq.even;
    r.c1_iii = fp.odd && fq.even && gap_condition(p, q);
    r.c1_iv = symmetric_gap_condition(p, q);
}

void fill_corollary2(ConditionsReport& r, const Poly& p, const Poly& q) {
    const ParityClass fp = parity_class(p), fq = parity_class(q);
    r.c2_i = fp.x_even && fq.x_odd;
    r.c2_ii = fp.y_odd && fq.y_even;
}

}  // namespace

ConditionsReport corollary1_conditions(const Poly& p, const Poly& q) {
    ConditionsReport r = shared(p, q);
    fill_corollary1(r, p, q);
    return r;
}

ConditionsReport corollary2_conditions(const Poly& p, const Poly& q) {
    ConditionsReport r = shared(p, q);
    fill_corollary2(r, p, q);
    return r;
}

ConditionsReport all_conditions(const Poly& p, const Poly& q) {
    ConditionsReport r = shared(p, q);
    fill_corollary1(r, p, q);
    fill_corollary2(r, p, q);
    return r;
}

}  // namespace shearscope
