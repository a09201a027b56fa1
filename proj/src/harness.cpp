#include "shearscope/harness.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "shearscope/conditions.hpp"
#include "shearscope/expr_io.hpp"
#include "shearscope/jacobian.hpp"

namespace shearscope {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

namespace {

Rational random_fraction(Rng& rng, unsigned bound, bool nonzero) {
    const auto b = static_cast<std::int64_t>(bound);
    std::int64_t num;
    do {
        num = rng.uniform(-b, b);
    } while (nonzero && num == 0);
    return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(rng.uniform(1, b))));
}

}  // namespace

ShearDecomposition random_shear(Rng& rng, unsigned max_degree, unsigned coeff_bound) {
    if (max_degree < 2 || coeff_bound < 1) throw std::invalid_argument("random_shear needs max_degree >= 2, coeff_bound >= 1");
    const auto b = static_cast<std::int64_t>(coeff_bound);
    const auto degree = static_cast<unsigned>(rng.uniform(2, max_degree));
    std::int64_t alpha, beta;
    do {
        alpha = rng.uniform(-b, b);
        beta = rng.uniform(-b, b);
    } while (alpha == 0 && beta == 0);

    std::map<unsigned, Rational> eps;
    for (unsigned i = 2; i <= degree; ++i) eps[i] = random_fraction(rng, coeff_bound, i == degree);
    return ShearDecomposition(Direction(alpha, beta), eps);
}

ShearDecomposition random_shear(unsigned max_degree, unsigned coeff_bound, std::uint64_t seed) {
    Rng rng(seed);
    return random_shear(rng, max_degree, coeff_bound);
}

Poly random_poly(Rng& rng, unsigned min_degree, unsigned max_degree, unsigned coeff_bound, unsigned max_terms) {
    Poly p;
    const auto terms = rng.uniform(0, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
        const auto d = static_cast<std::uint32_t>(rng.uniform(min_degree, max_degree));
        const auto ex = static_cast<std::uint32_t>(rng.uniform(0, d));
        p.add_term({ex, d - ex}, random_fraction(rng, coeff_bound, false));
    }
    return p;
}

void EnumerationSpec::validate() const {
    if (max_degree < 2) throw InvalidSpec("max_degree must be at least 2");
    if (coefficient_set.empty()) throw InvalidSpec("coefficient set is empty");
    if (std::find(coefficient_set.begin(), coefficient_set.end(), Rational(0)) == coefficient_set.end())
        throw InvalidSpec("coefficient set must contain 0");
    for (std::size_t i = 0; i < coefficient_set.size(); ++i)
        for (std::size_t j = i + 1; j < coefficient_set.size(); ++j)
            if (coefficient_set[i] == coefficient_set[j]) throw InvalidSpec("coefficient set has duplicates");
    if (mode == EnumerationMode::random && count == 0) throw InvalidSpec("random mode needs count > 0");
}

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : std::runtime_error("enumeration needs " +
                         (needed == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                               : std::to_string(needed)) +
                         " candidates, budget is " + std::to_string(budget)),
      needed_(needed) {}

Tally& Tally::operator+=(const Tally& o) {
    divergence_free += o.divergence_free;
    jacobian += o.jacobian;
    divfree_jacobian += o.divfree_jacobian;
    shear_decomposed += o.shear_decomposed;
    return *this;
}

EnumerationResult& EnumerationResult::merge(const EnumerationResult& o) {
    total_candidates += o.total_candidates;
    divergence_free_count += o.divergence_free_count;
    jacobian_count += o.jacobian_count;
    divfree_jacobian_count += o.divfree_jacobian_count;
    shear_decomposed_count += o.shear_decomposed_count;
    out_of_set_count += o.out_of_set_count;
    in_set += o.in_set;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    return *this;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > kSaturated / base) return kSaturated;
        out *= base;
    }
    return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

void check_budget(std::uint64_t needed, std::uint64_t budget) {
    if (needed > budget) throw BudgetExceeded(needed, budget);
}

std::vector<Monomial> monomials_between(unsigned lo, unsigned hi, const std::function<bool(const Monomial&)>& keep) {
    std::vector<Monomial> out;
    for (std::uint32_t d = lo; d <= hi; ++d)
        for (std::uint32_t ex = d + 1; ex-- > 0;) {
            const Monomial m{ex, d - ex};
            if (keep(m)) out.push_back(m);
        }
    return out;
}

bool all_monomials(const Monomial&) { return true; }

/// Maps a flat index to one coefficient per slot (mixed radix, base |set|).
class Odometer {
public:
    Odometer(const std::vector<Rational>& set, std::size_t slots) : set_(set), slots_(slots) {}

    std::vector<std::size_t> digits(std::uint64_t index) const {
        std::vector<std::size_t> d(slots_);
        for (std::size_t i = 0; i < slots_; ++i) {
            d[i] = index % set_.size();
            index /= set_.size();
        }
        return d;
    }

    Poly build(const std::vector<Monomial>& monos, const std::vector<std::size_t>& d, std::size_t offset) const {
        Poly p;
        for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], set_[d[offset + i]]);
        return p;
    }

private:
    const std::vector<Rational>& set_;
    std::size_t slots_;
};

/// Splits [0, total) into contiguous chunks handled on separate threads and
/// merges the per-chunk results.
EnumerationResult run_chunked(std::uint64_t total, unsigned threads,
                              const std::function<EnumerationResult(std::uint64_t, std::uint64_t)>& work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

    std::vector<EnumerationResult> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto job = [&](unsigned t) {
        const std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
        const std::uint64_t end = begin + total / threads + (t < total % threads ? 1 : 0);
        try {
            partial[t] = work(begin, end);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        job(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(job, t);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    EnumerationResult out;
    for (const auto& r : partial) out.merge(r);
    std::sort(out.counterexamples.begin(), out.counterexamples.end(), [](const PolyMap& a, const PolyMap& b) {
        return std::pair(format_poly(a.P), format_poly(a.Q)) < std::pair(format_poly(b.P), format_poly(b.Q));
    });
    return out;
}

bool in_set(const std::vector<Rational>& set, const Rational& c) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

/// Tallies one nonlinear pair (p, q) attached to the identity.
void tally_candidate(EnumerationResult& r, const Poly& p, const Poly& q, bool all_in_set) {
    const PolyMap phi{Poly::x() + p, Poly::y() + q};
    Tally t;
    const bool div_free = divergence(p, q).is_zero();
    const bool jac = is_jacobian_map(phi).holds;
    t.divergence_free = div_free;
    t.jacobian = jac;
    t.divfree_jacobian = div_free && jac;
    if (div_free && jac) {
        if (decompose_map(normalize(phi)).succeeded()) {
            t.shear_decomposed = 1;
        } else {
            r.counterexamples.push_back(phi);
        }
    }
    r.total_candidates += 1;
    r.divergence_free_count += t.divergence_free;
    r.jacobian_count += t.jacobian;
    r.divfree_jacobian_count += t.divfree_jacobian;
    r.shear_decomposed_count += t.shear_decomposed;
    if (all_in_set) {
        r.in_set += t;
    } else {
        r.out_of_set_count += 1;
    }
}

std::vector<std::uint64_t> candidate_indices(const EnumerationSpec& spec, std::uint64_t space) {
    std::vector<std::uint64_t> out;
    if (spec.mode == EnumerationMode::exhaustive) return out;
    Rng rng(spec.seed);
    out.reserve(spec.count);
    for (std::uint64_t i = 0; i < spec.count; ++i)
        out.push_back(static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(std::min<std::uint64_t>(
                                                                    space - 1, std::numeric_limits<std::int64_t>::max())))));
    return out;
}

}  // namespace

EnumerationResult enumerate_divergence_free(const EnumerationSpec& spec) {
    spec.validate();
    const auto p_monos = monomials_between(2, spec.max_degree, all_monomials);
    const auto f_monos = monomials_between(2, spec.max_degree, [](const Monomial& m) { return m.ey == 0; });
    const std::size_t slots = p_monos.size() + f_monos.size();
    const std::uint64_t space = saturating_pow(spec.coefficient_set.size(), slots);
    const bool random = spec.mode == EnumerationMode::random;
    check_budget(random ? spec.count : space, spec.budget);
    if (random && space == kSaturated) throw BudgetExceeded(space, spec.budget);

    const std::vector<std::uint64_t> sample = candidate_indices(spec, space);
    const Odometer odo(spec.coefficient_set, slots);

    return run_chunked(random ? spec.count : space, spec.threads, [&](std::uint64_t begin, std::uint64_t end) {
        EnumerationResult r;
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto d = odo.digits(random ? sample[i] : i);
            const Poly p = odo.build(p_monos, d, 0);
            // q_y = -p_x: the term c x^a y^b of p forces -a c / (b + 1) x^(a-1) y^(b+1) in q.
            Poly q = odo.build(f_monos, d, p_monos.size());
            bool all_in_set = true;
            for (const auto& [m, c] : p.terms()) {
                if (m.ex == 0) continue;
                const Rational forced = -c * Rational(static_cast<std::int64_t>(m.ex)) /
                                        Rational(static_cast<std::int64_t>(m.ey + 1));
                all_in_set = all_in_set && in_set(spec.coefficient_set, forced);
                q.add_term({m.ex - 1, m.ey + 1}, forced);
            }
            if (!divergence(p, q).is_zero())
                throw InternalVerificationFailed("constructed candidate is not divergence-free");
            tally_candidate(r, p, q, all_in_set);
        }
        return r;
    });
}

EnumerationResult enumerate_naive(const EnumerationSpec& spec) {
    spec.validate();
    if (spec.mode != EnumerationMode::exhaustive) throw InvalidSpec("naive enumeration is exhaustive only");
    const auto monos = monomials_between(2, spec.max_degree, all_monomials);
    const std::size_t slots = 2 * monos.size();
    const std::uint64_t space = saturating_pow(spec.coefficient_set.size(), slots);
    check_budget(space, spec.budget);
    const Odometer odo(spec.coefficient_set, slots);

    return run_chunked(space, spec.threads, [&](std::uint64_t begin, std::uint64_t end) {
        EnumerationResult r;
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto d = odo.digits(i);
            tally_candidate(r, odo.build(monos, d, 0), odo.build(monos, d, monos.size()), true);
        }
        return r;
    });
}

std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::c1_i: return "c1_i";
        case Hypothesis::c1_ii: return "c1_ii";
        case Hypothesis::c1_iii: return "c1_iii";
        case Hypothesis::c1_iv: return "c1_iv";
        case Hypothesis::c2_i: return "c2_i";
        case Hypothesis::c2_ii: return "c2_ii";
    }
    return "?";
}

Hypothesis parse_hypothesis(const std::string& name) {
    for (Hypothesis h : {Hypothesis::c1_i, Hypothesis::c1_ii, Hypothesis::c1_iii, Hypothesis::c1_iv, Hypothesis::c2_i,
                         Hypothesis::c2_ii})
        if (to_string(h) == name) return h;
    throw std::invalid_argument("unknown hypothesis '" + name + "'");
}

namespace {

bool is_corollary1(Hypothesis h) { return h != Hypothesis::c2_i && h != Hypothesis::c2_ii; }

/// Monomials that can appear in p (first) and q (second) under the hypothesis.
std::pair<std::function<bool(const Monomial&)>, std::function<bool(const Monomial&)>> supports(Hypothesis h) {
    auto even_deg = [](const Monomial& m) { return m.degree() % 2 == 0; };
    auto odd_deg = [](const Monomial& m) { return m.degree() % 2 == 1; };
    switch (h) {
        case Hypothesis::c1_ii: return {even_deg, even_deg};
        case Hypothesis::c1_iii: return {odd_deg, even_deg};
        case Hypothesis::c2_i:
            return {[](const Monomial& m) { return m.ex % 2 == 0; }, [](const Monomial& m) { return m.ex % 2 == 1; }};
        case Hypothesis::c2_ii:
            return {[](const Monomial& m) { return m.ey % 2 == 1; }, [](const Monomial& m) { return m.ey % 2 == 0; }};
        default: return {all_monomials, all_monomials};
    }
}

bool satisfies(Hypothesis h, const ConditionsReport& c) {
    switch (h) {
        case Hypothesis::c1_i: return c.c1_i.value_or(false);
        case Hypothesis::c1_ii: return c.c1_ii;
        case Hypothesis::c1_iii: return c.c1_iii;
        case Hypothesis::c1_iv: return c.c1_iv;
        case Hypothesis::c2_i: return c.c2_i.value_or(false);
        case Hypothesis::c2_ii: return c.c2_ii.value_or(false);
    }
    return false;
}

std::vector<LinearPart> linear_parts(const EnumerationSpec& spec, const CrossCheckOptions& options) {
    if (!options.all_linear_parts || !is_corollary1(options.hypothesis)) return {LinearPart::identity()};
    std::vector<LinearPart> out;
    const auto& s = spec.coefficient_set;
    for (const auto& a : s)
        for (const auto& b : s)
            for (const auto& c : s)
                for (const auto& d : s) {
                    LinearPart l(a, b, c, d);
                    if (!l.determinant().is_zero()) out.push_back(l);
                }
    return out;
}

}  // namespace

EnumerationResult cross_check_corollaries(const EnumerationSpec& spec, const CrossCheckOptions& options) {
    spec.validate();
    const auto [keep_p, keep_q] = supports(options.hypothesis);
    const auto p_monos = monomials_between(2, spec.max_degree, keep_p);
    const auto q_monos = monomials_between(2, spec.max_degree, keep_q);
    const auto linears = linear_parts(spec, options);
    const std::size_t slots = p_monos.size() + q_monos.size();
    const std::uint64_t pairs = saturating_pow(spec.coefficient_set.size(), slots);
    const std::uint64_t space = saturating_mul(pairs, linears.size());
    const bool random = spec.mode == EnumerationMode::random;
    check_budget(random ? spec.count : space, spec.budget);
    if (random && space == kSaturated) throw BudgetExceeded(space, spec.budget);

    const std::vector<std::uint64_t> sample = candidate_indices(spec, space);
    const Odometer odo(spec.coefficient_set, slots);

    return run_chunked(random ? spec.count : space, spec.threads, [&](std::uint64_t begin, std::uint64_t end) {
        EnumerationResult r;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t index = random ? sample[i] : i;
            const auto d = odo.digits(index / linears.size());
            const Poly p = odo.build(p_monos, d, 0);
            const Poly q = odo.build(q_monos, d, p_monos.size());
            if (!satisfies(options.hypothesis, all_conditions(p, q))) continue;

            const PolyMap phi = linears[index % linears.size()].as_map() + PolyMap{p, q};
            r.total_candidates += 1;
            const NormalizedMap n = normalize(phi);
            const auto df = is_divergence_free_jacobian(n);
            const bool jac = df.witness.determinant.is_constant() && !df.witness.determinant.is_zero();
            const bool div_free = df.witness.divergence.is_zero();
            r.divergence_free_count += div_free;
            if (!jac) continue;
            r.jacobian_count += 1;
            r.divfree_jacobian_count += df.holds;
            if (decompose_map(n).succeeded()) {
                r.shear_decomposed_count += 1;
            } else {
                r.counterexamples.push_back(phi);
            }
        }
        r.in_set = {r.divergence_free_count, r.jacobian_count, r.divfree_jacobian_count, r.shear_decomposed_count};
        return r;
    });
}

std::vector<Preset> presets() {
    auto spec = [](unsigned degree) {
        EnumerationSpec s;
        s.max_degree = degree;
        s.coefficient_set = {-1, 0, 1};
        return s;
    };
    std::vector<Preset> out;
    out.push_back({"theorem1-d2", spec(2), std::nullopt});
    out.push_back({"theorem1-d3", spec(3), std::nullopt});
    for (Hypothesis h : {Hypothesis::c1_i, Hypothesis::c1_ii, Hypothesis::c1_iii, Hypothesis::c1_iv, Hypothesis::c2_i,
                         Hypothesis::c2_ii})
        out.push_back({to_string(h) + "-d2", spec(2), CrossCheckOptions{h, false}});
    out.push_back({"c1_ii-d2-linear", spec(2), CrossCheckOptions{Hypothesis::c1_ii, true}});
    for (Hypothesis h : {Hypothesis::c1_ii, Hypothesis::c1_iii, Hypothesis::c2_i, Hypothesis::c2_ii})
        out.push_back({to_string(h) + "-d3", spec(3), CrossCheckOptions{h, false}});
    out.push_back({"c1_ii-d3-linear", spec(3), CrossCheckOptions{Hypothesis::c1_ii, true}});
    return out;
}

EnumerationResult run_preset(const Preset& preset) {
    if (preset.cross_check) return cross_check_corollaries(preset.spec, *preset.cross_check);
    return enumerate_divergence_free(preset.spec);
}

}  // namespace shearscope
