#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "shearscope/poly.hpp"

namespace shearscope {

struct ParseOptions {
    /// Largest exponent accepted after '^'.
    unsigned max_exponent = 64;
    /// Largest total degree any subexpression may reach.
    unsigned max_degree = 512;
    /// Parenthesis / unary-minus nesting limit.
    unsigned max_depth = 256;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column, std::string component = {});

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// "P" or "Q" when raised by parse_map, empty otherwise.
    const std::string& component() const { return component_; }
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
    std::string component_;
};

/// Grammar: sums and products of x, y, integer literals and fraction
/// literals (3, 1/2), with '^' taking a non-negative integer exponent.
/// Multiplication must be written explicitly. The result is fully expanded.
Poly parse_poly(std::string_view src, const ParseOptions& options = {});
PolyMap parse_map(std::string_view src_p, std::string_view src_q, const ParseOptions& options = {});

/// Re-parseable rendering, terms in graded order: "x^2 - 2*x*y + y^2".
std::string format_poly(const Poly& p);
/// Same rendering with x renamed, for one-variable polynomials g(u).
std::string format_univariate(const Poly& p, char var);

}  // namespace shearscope
