#pragma once

// Input grammar for surds, inverse of format_surd. Accepted shapes, with
// whitespace ignored everywhere:
//   sqrt(N)            (sqrt(N)+p)/q        sqrt(N)+p
//   sqrt(N)/q          (sqrt(N)-p)/q        sqrt(N)-p
// and the same forms with a leading minus on sqrt for eps = -1.

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>

#include "surdpath/errors.hpp"
#include "surdpath/surd.hpp"

namespace surdpath {

namespace detail {

class SurdParser {
public:
    explicit SurdParser(const std::string& input) {
        for (char ch : input)
            if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }

    QuadraticSurd parse() {
        bool parens = consume('(');
        int eps = consume('-') ? -1 : 1;
        expect_word("sqrt(");
        int64_t N = integer();
        expect(')');
        int64_t c = 0;
        if (peek() == '+' || peek() == '-') {
            bool neg = consume('-');
            if (!neg) consume('+');
            c = integer();
            if (neg) c = -c;
        }
        if (parens) expect(')');
        int64_t d = 1;
        if (consume('/')) d = integer();
        if (pos_ != text_.size())
            fail(Errc::ParseError, "unexpected trailing input '" + text_.substr(pos_) + "'");
        return validated(N, eps, c, d);
    }

private:
    static QuadraticSurd validated(int64_t N, int eps, int64_t c, int64_t d) {
        try {
            return make_surd(N, eps, c, d);
        } catch (const SurdError& e) {
            // Rephrase in the root's (N, p, q) vocabulary for CLI users.
            switch (e.code()) {
                case Errc::NonPositiveDenominator: fail(e.code(), "q must be positive");
                case Errc::SquareRadicand:
                    fail(e.code(), "N must be at least 2 and not a perfect square");
                case Errc::DivisibilityViolation: fail(e.code(), "q must divide N - p^2");
                case Errc::NonPositiveValue: fail(e.code(), "the value must be positive");
                default: throw;
            }
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }

    void expect(char ch) {
        if (!consume(ch))
            fail(Errc::ParseError, std::string("expected '") + ch + "' at position " +
                                       std::to_string(pos_));
    }

    void expect_word(const std::string& word) {
        if (text_.compare(pos_, word.size(), word) != 0)
            fail(Errc::ParseError, "expected '" + word + "' at position " + std::to_string(pos_));
        pos_ += word.size();
    }

    int64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(Errc::ParseError, "expected a number at position " + std::to_string(pos_));
        int64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int digit = text_[pos_++] - '0';
            if (value > (std::numeric_limits<int64_t>::max() - digit) / 10)
                fail(Errc::ParseError, "number too large");
            value = value * 10 + digit;
        }
        return value;
    }

    std::string text_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parse a surd from its display form; parse(format_surd(x)) == x.
inline QuadraticSurd parse_surd(const std::string& input) {
    return detail::SurdParser(input).parse();
}

}  // namespace surdpath
