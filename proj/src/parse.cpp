#include <cctype>
#include <string>

#include "scrollreg/polynomial.hpp"

namespace scrollreg {

namespace {

// Recursive-descent parser for the polynomial expression grammar. Position
// reporting is 1-based over the raw input bytes.
class Parser {
  public:
    Parser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek()))
                fail("expected a nonnegative integer exponent after '^'");
            unsigned long e = parse_uint();
            if (e > 1000) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(c)) {
            Integer num = parse_integer();
            skip_ws();
            // Rational literal p/q, accepted so canonical output re-parses.
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(peek()))
                    fail("expected an integer denominator after '/'");
                Integer den = parse_integer();
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return Polynomial::constant(ring_, q);
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (std::isalpha(c)) {
            std::size_t start = pos_;
            std::string name = parse_identifier();
            auto idx = ring_->var_index(name);
            if (!idx)
                throw ParseError(start + 1,
                                 "unknown variable '" + name + "'");
            return Polynomial::variable(ring_, *idx);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(text_[pos_])) ++pos_;
        return Integer(text_.substr(start, pos_ - start), 10);
    }

    unsigned long parse_uint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(text_[pos_])) ++pos_;
        return std::stoul(text_.substr(start, pos_ - start));
    }

    std::string parse_identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(text_[pos_]) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(pos_ + 1, "syntax error: " + msg);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace scrollreg
