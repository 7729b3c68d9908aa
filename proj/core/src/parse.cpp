#include "esing/parse.hpp"

#include <cctype>
#include <map>

namespace esing {

namespace {

// Full (untruncated) polynomial accumulator plus the largest degree
// written in the source, so over-order terms are diagnosed even when their
// coefficients cancel or vanish.
struct Expanded {
    std::map<PolyJet::Key, Rational> terms;
    unsigned written_degree = 0;
};

class Parser {
  public:
    Parser(const std::string& text, unsigned order) : text_(text), order_(order) {}

    PolyJet run() {
        skip_ws();
        Expanded e = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) {
            fail("unexpected trailing input");
        }
        PolyJet jet(order_);
        for (auto& [key, c] : e.terms) {
            if (key.first + key.second > order_) {
                throw ParseError("term of degree " + std::to_string(key.first + key.second) +
                                     " exceeds jet order " + std::to_string(order_),
                                 line_, 1);
            }
            jet.set_coeff(key.first, key.second, std::move(c));
        }
        return jet;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, column());
    }

    int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
                line_start_ = pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int parse_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected integer");
        }
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += text_[pos_++];
        }
        return Int(digits);
    }

    unsigned parse_exponent() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected integer exponent");
        }
        const int at = column();
        Int e = parse_integer();
        if (peek() == '/') {
            throw ParseError("non-integer exponent", line_, at);
        }
        if (e > 64) {
            throw ParseError("exponent too large", line_, at);
        }
        return e.convert_to<unsigned>();
    }

    // sum := ['+'|'-'] product (('+'|'-') product)*
    Expanded parse_sum() {
        skip_ws();
        int sign = 1;
        while (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') sign = -sign;
            ++pos_;
            skip_ws();
        }
        Expanded acc = parse_product();
        if (sign < 0) negate(acc);
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            Expanded rhs = parse_product();
            if (sign < 0) negate(rhs);
            for (auto& [key, c] : rhs.terms) {
                acc.terms[key] += c;
            }
            acc.written_degree = std::max(acc.written_degree, rhs.written_degree);
        }
        prune(acc);
        return acc;
    }

    // product := power ('*' power)*
    Expanded parse_product() {
        Expanded acc = parse_power();
        for (;;) {
            skip_ws();
            if (!consume('*')) break;
            Expanded rhs = parse_power();
            acc = multiply(acc, rhs);
        }
        check_written_degree(acc.written_degree);
        return acc;
    }

    // power := primary ['^' INT]
    Expanded parse_power() {
        Expanded base = parse_primary();
        skip_ws();
        if (consume('^')) {
            const unsigned e = parse_exponent();
            Expanded acc = constant(Rational(1));
            for (unsigned k = 0; k < e; ++k) acc = multiply(acc, base);
            acc.written_degree = base.written_degree * e;
            check_written_degree(acc.written_degree);
            return acc;
        }
        return base;
    }

    // primary := NUMBER ['/' NUMBER] | 'x1' | 'x2' | 'x' | 'y' | '(' sum ')'
    Expanded parse_primary() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_integer();
            if (consume('/')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                    fail("expected denominator");
                }
                const int at = column();
                Int den = parse_integer();
                if (den == 0) {
                    throw ParseError("zero denominator", line_, at);
                }
                return constant(Rational(num, den));
            }
            return constant(Rational(num));
        }
        if (c == '(') {
            ++pos_;
            Expanded inner = parse_sum();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            if (c == 'y') return variable(0, 1);
            if (peek() == '1') {
                ++pos_;
                return variable(1, 0);
            }
            if (peek() == '2') {
                ++pos_;
                return variable(0, 1);
            }
            return variable(1, 0);  // bare 'x' aliases x1
        }
        fail(pos_ < text_.size() ? std::string("unexpected character '") + c + "'"
                                 : "unexpected end of input");
    }

    void check_written_degree(unsigned d) const {
        if (d > order_) {
            throw ParseError("term of degree " + std::to_string(d) + " exceeds jet order " +
                                 std::to_string(order_) + " (raise --order instead of truncating)",
                             line_, column());
        }
    }

    static Expanded constant(Rational v) {
        Expanded e;
        if (!v.is_zero()) e.terms[{0, 0}] = std::move(v);
        return e;
    }

    static Expanded variable(unsigned i, unsigned j) {
        Expanded e;
        e.terms[{i, j}] = Rational(1);
        e.written_degree = 1;
        return e;
    }

    static void negate(Expanded& e) {
        for (auto& [key, c] : e.terms) c = -c;
    }

    static void prune(Expanded& e) {
        for (auto it = e.terms.begin(); it != e.terms.end();) {
            it = it->second.is_zero() ? e.terms.erase(it) : std::next(it);
        }
    }

    static Expanded multiply(const Expanded& a, const Expanded& b) {
        Expanded r;
        for (const auto& [ka, ca] : a.terms) {
            for (const auto& [kb, cb] : b.terms) {
                r.terms[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
            }
        }
        prune(r);
        r.written_degree = a.written_degree + b.written_degree;
        return r;
    }

    const std::string& text_;
    unsigned order_;
    size_t pos_ = 0;
    size_t line_start_ = 0;
    int line_ = 1;
};

}  // namespace

GermExpr parse_germ(const std::string& text, unsigned order) {
    if (order < 5) {
        throw PreconditionError("germ order must be at least 5");
    }
    Parser p(text, order);
    PolyJet jet = p.run();  // runs before the aggregate: nothing throws mid-init
    return {text, order, std::move(jet)};
}

}  // namespace esing
