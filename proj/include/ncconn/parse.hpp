#ifndef NCCONN_PARSE_HPP
#define NCCONN_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "ncconn/algebra.hpp"

namespace ncconn {

/// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Recursive-descent parser for the expression grammar
///   element := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := coeff | mono
///   mono    := ('U'|'V'|'q') ['^' int]
///   coeff   := rational ['i'] | '(' rational ('+'|'-') rational 'i' ')'
/// Integers are arbitrary precision; whitespace is insignificant.
class ExpressionParser {
public:
    ExpressionParser(std::string text, QMode mode) : text_(std::move(text)), mode_(mode) {}

    AlgebraElement parse() {
        AlgebraElement r = parse_element();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return r;
    }

private:
    AlgebraElement parse_element() {
        AlgebraElement acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement parse_term() {
        AlgebraElement acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc *= parse_factor();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            AlgebraElement f = parse_factor();
            return c == '-' ? -f : f;
        }
        if (c == 'U' || c == 'V' || c == 'q') return parse_mono();
        if (c == '(') return parse_complex_coeff();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') return parse_simple_coeff();
        fail("expected coefficient or monomial");
    }

    AlgebraElement parse_mono() {
        char gen = text_[pos_++];
        long e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            e = parse_long();
        }
        if (gen == 'U') return AlgebraElement::U(mode_, e);
        if (gen == 'V') return AlgebraElement::V(mode_, e);
        // q^e; at q = 1 this is just 1.
        if (mode_ == QMode::one) return AlgebraElement::one(mode_);
        return AlgebraElement::constant(mode_, Scalar::q_power(e));
    }

    AlgebraElement parse_simple_coeff() {
        GaussianRational g = parse_rational_maybe_i();
        return AlgebraElement::constant(mode_, Scalar(g));
    }

    AlgebraElement parse_complex_coeff() {
        expect('(');
        GaussianRational first = parse_rational_maybe_i();
        skip_ws();
        char c = peek();
        if (c == ')') {
            ++pos_;
            return AlgebraElement::constant(mode_, Scalar(first));
        }
        if (c != '+' && c != '-') fail("expected '+', '-' or ')'");
        ++pos_;
        GaussianRational second = parse_rational_maybe_i();
        if (c == '-') second = -second;
        expect(')');
        return AlgebraElement::constant(mode_, Scalar(first + second));
    }

    /// rational ['i'], or a bare 'i'.
    GaussianRational parse_rational_maybe_i() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        skip_ws();
        mpq_class value;
        if (peek() == 'i') {
            ++pos_;
            value = 1;
            GaussianRational g(mpq_class(0), neg ? mpq_class(-1) : mpq_class(1));
            return g;
        }
        mpz_class num = parse_integer();
        mpz_class den = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            den = parse_integer();
            if (den == 0) fail("zero denominator");
        }
        value = mpq_class(num, den);
        value.canonicalize();
        if (neg) value = -value;
        skip_ws();
        if (peek() == 'i') {
            ++pos_;
            return GaussianRational(mpq_class(0), value);
        }
        return GaussianRational(value);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    long parse_long() {
        mpz_class z = parse_integer();
        if (!z.fits_slong_p()) fail("exponent out of range");
        return z.get_si();
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    std::string text_;
    QMode mode_;
    std::size_t pos_ = 0;
};

inline AlgebraElement parse_element(const std::string& text, QMode mode) {
    return ExpressionParser(text, mode).parse();
}

}  // namespace ncconn

#endif
