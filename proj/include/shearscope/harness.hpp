#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "shearscope/poly.hpp"
#include "shearscope/shear.hpp"

namespace shearscope {

/// Deterministic generator: std::mt19937_64 (whose output sequence is fixed by
/// the standard) with rejection sampling for bounded integers, so a seed maps
/// to the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Random valid decomposition: degree uniform in [2, max_degree], direction
/// from integer pairs with |alpha|, |beta| <= coeff_bound, eps_i = n/d with
/// |n| <= coeff_bound, 1 <= d <= coeff_bound, top coefficient nonzero.
ShearDecomposition random_shear(Rng& rng, unsigned max_degree, unsigned coeff_bound);
ShearDecomposition random_shear(unsigned max_degree, unsigned coeff_bound, std::uint64_t seed);

/// Up to max_terms random monomials with degrees in [min_degree, max_degree]
/// and coefficients n/d bounded by coeff_bound.
Poly random_poly(Rng& rng, unsigned min_degree, unsigned max_degree, unsigned coeff_bound,
                 unsigned max_terms = 6);

enum class EnumerationMode { exhaustive, random };

struct EnumerationSpec {
    unsigned max_degree = 2;
    std::vector<Rational> coefficient_set{-1, 0, 1};
    EnumerationMode mode = EnumerationMode::exhaustive;
    std::uint64_t count = 0;  ///< samples, random mode only
    std::uint64_t seed = 0;   ///< random mode only
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;  ///< 0 = hardware concurrency

    /// Throws InvalidSpec.
    void validate() const;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
    std::uint64_t needed() const { return needed_; }

private:
    std::uint64_t needed_;
};

struct Tally {
    std::uint64_t divergence_free = 0;
    std::uint64_t jacobian = 0;
    std::uint64_t divfree_jacobian = 0;
    std::uint64_t shear_decomposed = 0;

    Tally& operator+=(const Tally& o);
    friend bool operator==(const Tally&, const Tally&) = default;
};

struct EnumerationResult {
    std::uint64_t total_candidates = 0;
    std::uint64_t divergence_free_count = 0;
    std::uint64_t jacobian_count = 0;
    std::uint64_t divfree_jacobian_count = 0;
    std::uint64_t shear_decomposed_count = 0;
    /// Candidates whose forced q coefficients leave the coefficient set.
    std::uint64_t out_of_set_count = 0;
    /// Counts restricted to candidates with every coefficient in the set.
    Tally in_set;
    /// Sorted by rendered text.
    std::vector<PolyMap> counterexamples;

    bool confirmed() const { return counterexamples.empty() && shear_decomposed_count == divfree_jacobian_count; }
    EnumerationResult& merge(const EnumerationResult& o);
};

/// Nonlinear parts (p, q) with monomial degrees in [2, max_degree]: p free,
/// q = q_forced(p) + f(x) where q_forced solves q_y = -p_x and f is free.
/// Every divergence-free jacobian candidate is run through decompose_map;
/// failures are recorded as counterexamples.
EnumerationResult enumerate_divergence_free(const EnumerationSpec& spec);

/// Oracle for the above: p and q both free over the coefficient set, no
/// pruning. Exhaustive mode only.
EnumerationResult enumerate_naive(const EnumerationSpec& spec);

enum class Hypothesis { c1_i, c1_ii, c1_iii, c1_iv, c2_i, c2_ii };

std::string to_string(Hypothesis h);
/// Throws std::invalid_argument for unknown names.
Hypothesis parse_hypothesis(const std::string& name);

struct CrossCheckOptions {
    Hypothesis hypothesis = Hypothesis::c1_ii;
    /// Corollary 1 only: also range the linear part over every invertible
    /// matrix with entries in the coefficient set.
    bool all_linear_parts = false;
};

/// Enumerates maps (A(x, y) + (p, q)) whose parts satisfy the hypothesis and
/// checks that each jacobian one normalizes to a shear map. Here
/// total_candidates counts the maps satisfying the hypothesis.
EnumerationResult cross_check_corollaries(const EnumerationSpec& spec, const CrossCheckOptions& options);

struct Preset {
    std::string name;
    EnumerationSpec spec;
    /// Empty for the divergence-free enumeration.
    std::optional<CrossCheckOptions> cross_check;
};

/// The enumeration slices shipped with the tool.
std::vector<Preset> presets();
EnumerationResult run_preset(const Preset& preset);

}  // namespace shearscope
