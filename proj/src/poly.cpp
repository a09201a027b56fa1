#include "shearscope/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace shearscope {

Poly::Poly(std::initializer_list<std::pair<Monomial, Rational>> terms) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

Poly Poly::constant(const Rational& c) { return term(c, 0, 0); }

Poly Poly::term(const Rational& c, std::uint32_t ex, std::uint32_t ey) {
    Poly p;
    p.add_term({ex, ey}, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

std::optional<std::uint32_t> Poly::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::uint32_t Poly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, v == Var::x ? m.ex : m.ey);
    return d;
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || *degree() == *order();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

// Coefficients rescaled to integers over one common denominator, so products
// accumulate with plain integer multiply-add and reduce once at the end.
struct Scaled {
    std::vector<std::pair<Monomial, mpz_class>> terms;
    mpz_class den = 1;
    std::uint32_t max_ex = 0;
    std::uint32_t max_ey = 0;
};

Scaled scaled(const Poly::TermMap& t) {
    Scaled s;
    for (const auto& [m, c] : t) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.raw().get_den_mpz_t());
    s.terms.reserve(t.size());
    for (const auto& [m, c] : t) {
        s.terms.emplace_back(m, c.raw().get_num() * (s.den / c.raw().get_den()));
        s.max_ex = std::max(s.max_ex, m.ex);
        s.max_ey = std::max(s.max_ey, m.ey);
    }
    return s;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    const Scaled sa = scaled(a.terms_), sb = scaled(b.terms_);
    const mpz_class den = sa.den * sb.den;
    auto emit = [&](const Monomial& m, const mpz_class& num) {
        if (sgn(num) == 0) return;
        out.terms_.emplace(m, Rational(mpq_class(num, den)));
    };

    const std::size_t width = std::size_t(sa.max_ey) + sb.max_ey + 1;
    const std::size_t cells = (std::size_t(sa.max_ex) + sb.max_ex + 1) * width;
    if (cells <= std::max<std::size_t>(4096, 4 * sa.terms.size() * sb.terms.size())) {
        std::vector<mpz_class> grid(cells);
        for (const auto& [ma, ca] : sa.terms)
            for (const auto& [mb, cb] : sb.terms) {
                mpz_class& cell = grid[(std::size_t(ma.ex) + mb.ex) * width + ma.ey + mb.ey];
                mpz_addmul(cell.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        for (std::size_t k = 0; k < cells; ++k)
            emit({static_cast<std::uint32_t>(k / width), static_cast<std::uint32_t>(k % width)}, grid[k]);
    } else {
        std::map<Monomial, mpz_class, GradedLexLess> acc;
        for (const auto& [ma, ca] : sa.terms)
            for (const auto& [mb, cb] : sb.terms) {
                mpz_class& cell = acc[Monomial{ma.ex + mb.ex, ma.ey + mb.ey}];
                mpz_addmul(cell.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        for (const auto& [m, num] : acc) emit(m, num);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly negate(const Poly& p) { return -p; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& base, unsigned exponent) {
    Poly result = Poly::constant(1);
    Poly square = base;
    while (exponent != 0) {
        if (exponent & 1u) result = result * square;
        exponent >>= 1;
        if (exponent != 0) square = square * square;
    }
    return result;
}

Poly partial(const Poly& p, Var v) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = v == Var::x ? m.ex : m.ey;
        if (e == 0) continue;
        const Monomial dm = v == Var::x ? Monomial{m.ex - 1, m.ey} : Monomial{m.ex, m.ey - 1};
        out.add_term(dm, c * Rational(static_cast<std::int64_t>(e)));
    }
    return out;
}

Rational evaluate(const Poly& p, const Rational& x, const Rational& y) {
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) sum += c * pow(x, m.ex) * pow(y, m.ey);
    return sum;
}

std::vector<HomogeneousComponent> homogeneous_components(const Poly& p) {
    std::vector<HomogeneousComponent> out;
    for (const auto& [m, c] : p.terms()) {
        if (out.empty() || out.back().degree != m.degree()) out.push_back({m.degree(), Poly{}});
        out.back().component.add_term(m, c);
    }
    return out;
}

Poly homogeneous_part(const Poly& p, std::uint32_t d) {
    Poly out;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

namespace {

class PowerCache {
public:
    explicit PowerCache(const Poly& base) : powers_{Poly::constant(1), base} {}

    const Poly& get(std::uint32_t k) {
        while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
        return powers_[k];
    }

private:
    std::vector<Poly> powers_;
};

}  // namespace

Poly substitute(const Poly& f, const PolyMap& g) {
    if (f.is_zero()) return {};

    // x-exponent -> [(y-exponent, coefficient)], both descending.
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>, std::greater<>> rows;
    for (const auto& [m, c] : f.terms()) rows[m.ex].emplace_back(m.ey, c);
    for (auto& [ex, row] : rows)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    PowerCache xs(g.P);
    PowerCache ys(g.Q);

    Poly result;
    std::optional<std::uint32_t> prev_ex;
    for (const auto& [ex, row] : rows) {
        Poly h = Poly::constant(row.front().second);
        std::uint32_t prev_ey = row.front().first;
        for (std::size_t i = 1; i < row.size(); ++i) {
            h = h * ys.get(prev_ey - row[i].first);
            h.add_term({0, 0}, row[i].second);
            prev_ey = row[i].first;
        }
        if (prev_ey != 0) h = h * ys.get(prev_ey);

        if (prev_ex) result = result * xs.get(*prev_ex - ex);
        result += h;
        prev_ex = ex;
    }
    if (*prev_ex != 0) result = result * xs.get(*prev_ex);
    return result;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    return {substitute(outer.P, inner), substitute(outer.Q, inner)};
}

PolyMap operator+(const PolyMap& a, const PolyMap& b) { return {a.P + b.P, a.Q + b.Q}; }
PolyMap operator-(const PolyMap& a, const PolyMap& b) { return {a.P - b.P, a.Q - b.Q}; }

}  // namespace shearscope
