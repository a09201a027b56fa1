#include "shearscope/expr_io.hpp"

#include <cctype>

namespace shearscope {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::string component)
    : std::runtime_error((component.empty() ? std::string() : component + ": ") + "line " +
                         std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      component_(std::move(component)) {}

namespace {

class Parser {
public:
    Parser(std::string_view src, const ParseOptions& options) : src_(src), options_(options) {}

    Poly run() {
        skip_space();
        if (at_end()) fail("empty expression");
        Poly p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    struct Depth {
        Parser& parser;
        explicit Depth(Parser& p) : parser(p) {
            if (++parser.depth_ > parser.options_.max_depth) parser.fail("expression nested too deeply");
        }
        ~Depth() { --parser.depth_; }
    };

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        // Column counts from the start of the line containing `at`.
        std::size_t line = 1, start = 0;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                start = i + 1;
            }
        }
        throw ParseError(message, line, at - start + 1);
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void check_degree(const Poly& p, std::size_t at) const {
        if (p.degree().value_or(0) > options_.max_degree)
            fail_at("degree exceeds bound " + std::to_string(options_.max_degree), at);
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (!accept('*')) return acc;
            Poly rhs = unary();
            if (acc.degree().value_or(0) + rhs.degree().value_or(0) > options_.max_degree)
                fail_at("degree exceeds bound " + std::to_string(options_.max_degree), at);
            acc = acc * rhs;
        }
    }

    Poly unary() {
        Depth guard(*this);
        if (accept('-')) return -unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_space();
        const std::size_t exp_at = pos_;
        const Poly exponent = unary();
        if (!exponent.is_constant()) fail_at("exponent must be a constant", exp_at);
        const Rational e = exponent.constant_term();
        if (!e.is_integer()) fail_at("exponent must be an integer", exp_at);
        if (e.sign() < 0) fail_at("negative exponent", exp_at);
        if (e > Rational(static_cast<std::int64_t>(options_.max_exponent)))
            fail_at("exponent exceeds bound " + std::to_string(options_.max_exponent), exp_at);
        const unsigned k = static_cast<unsigned>(e.numerator().get_ui());
        if (static_cast<std::uint64_t>(base.degree().value_or(0)) * k > options_.max_degree)
            fail_at("degree exceeds bound " + std::to_string(options_.max_degree), at);
        return pow(base, k);
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    Poly primary() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (c == 'x' || c == 'y') {
            advance();
            return c == 'x' ? Poly::x() : Poly::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = digits();
            skip_space();
            if (!at_end() && peek() == '/') {
                advance();
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("'/' is only allowed inside a fraction literal such as 1/2");
                const std::size_t den_at = pos_;
                const Integer den = digits();
                if (den == 0) fail_at("zero denominator", den_at);
                return Poly::constant(Rational(num, den));
            }
            return Poly::constant(Rational(num));
        }
        if (c == '(') {
            Depth guard(*this);
            advance();
            Poly inner = expr();
            if (!accept(')')) {
                if (at_end()) fail("missing ')'");
                fail(std::string("expected ')' but found '") + peek() + "'");
            }
            check_degree(inner, pos_);
            return inner;
        }
        if (c == '/') fail("'/' is only allowed inside a fraction literal such as 1/2");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
    unsigned depth_ = 0;
};

void append_monomial(std::string& out, const Monomial& m, char xname, char yname) {
    auto factor = [&](char name, std::uint32_t e) {
        if (e == 0) return;
        if (out.size() && out.back() != ' ' && out.back() != '-') out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    };
    factor(xname, m.ex);
    factor(yname, m.ey);
}

std::string render(const Poly& p, char xname, char yname) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        const bool unit = mag == Rational(1);
        if (m.degree() == 0 || !unit) out += mag.str();
        append_monomial(out, m, xname, yname);
    }
    return out;
}

}  // namespace

Poly parse_poly(std::string_view src, const ParseOptions& options) { return Parser(src, options).run(); }

PolyMap parse_map(std::string_view src_p, std::string_view src_q, const ParseOptions& options) {
    PolyMap out;
    try {
        out.P = parse_poly(src_p, options);
    } catch (const ParseError& e) {
        throw ParseError(e.detail(), e.line(), e.column(), "P");
    }
    try {
        out.Q = parse_poly(src_q, options);
    } catch (const ParseError& e) {
        throw ParseError(e.detail(), e.line(), e.column(), "Q");
    }
    return out;
}

std::string format_poly(const Poly& p) { return render(p, 'x', 'y'); }

std::string format_univariate(const Poly& p, char var) { return render(p, var, '?'); }

}  // namespace shearscope
