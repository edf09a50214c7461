#pragma once

#include <cctype>
#include <string>

#include "ktwist/poly.hpp"

namespace ktwist {

// Grammar: integer literals, the active ring's variable names, + - * ^ and
// parentheses. ^ takes an integer exponent; negative exponents are accepted
// only in Laurent rings and only directly on a variable. RatPoly parsing
// additionally accepts p/q literals (used by cache round-trips).
MultiPoly parse_poly(const std::string& text, RingPtr ring);
RatPoly parse_rat_poly(const std::string& text, RingPtr ring);

namespace detail {

template <class C>
class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    BasicPoly<C> run() {
        auto p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Int parse_int_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return Int(text_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        skip_ws();
        bool neg = accept('-');
        Int v = parse_int_literal();
        if (!v.fits_sint_p()) throw ParseError("exponent too large", pos_);
        return neg ? -static_cast<int>(v.get_si()) : static_cast<int>(v.get_si());
    }

    BasicPoly<C> parse_expr() {
        skip_ws();
        bool neg = accept('-');
        BasicPoly<C> acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    BasicPoly<C> parse_term() {
        BasicPoly<C> acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    BasicPoly<C> parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            BasicPoly<C> inner = parse_expr();
            if (!accept(')')) throw ParseError("unbalanced parenthesis", open);
            if (peek('^')) {
                ++pos_;
                int e = parse_exponent();
                if (e < 0) throw ParseError("negative exponent on a non-monomial", pos_);
                return pow(inner, e);
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = parse_int_literal();
            C coeff = literal(v);
            if (peek('^')) {
                ++pos_;
                int e = parse_exponent();
                if (e < 0) throw ParseError("negative exponent on a non-monomial", pos_);
                return pow(BasicPoly<C>(ring_, coeff), e);
            }
            return BasicPoly<C>(ring_, coeff);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw ParseError("expected operand", pos_);
    }

    C literal(Int v) {
        if constexpr (std::is_same_v<C, Rat>) {
            if (peek('/')) {
                ++pos_;
                Int den = parse_int_literal();
                if (sgn(den) == 0) throw ParseError("zero denominator", pos_);
                return make_rat(std::move(v), std::move(den));
            }
            return Rat(std::move(v));
        } else {
            return v;
        }
    }

    BasicPoly<C> parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int idx = -1;
        for (int i = 0; i < ring_->nvars; ++i)
            if (ring_->names[i] == name) {
                idx = i;
                break;
            }
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        int e = 1;
        if (peek('^')) {
            ++pos_;
            std::size_t at = pos_;
            e = parse_exponent();
            if (e < 0 && !ring_->laurent)
                throw ParseError("negative exponent in non-Laurent ring", at);
        }
        return BasicPoly<C>::variable(ring_, idx, e);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, RingPtr ring) {
    return detail::PolyParser<Int>(text, std::move(ring)).run();
}

inline RatPoly parse_rat_poly(const std::string& text, RingPtr ring) {
    return detail::PolyParser<Rat>(text, std::move(ring)).run();
}

}  // namespace ktwist
