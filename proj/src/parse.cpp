#include "unirat/parse.hpp"

#include <cctype>

namespace unirat {

namespace {

class Parser {
public:
    Parser(const std::string& src, const Ring& ring) : src_(src), ring_(ring) {}

    RatFn run() {
        RatFn r = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    RatFn expr() {
        RatFn r = term();
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFn term() {
        RatFn r = unary();
        while (true) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFn d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatFn unary() {
        if (accept('-')) return -unary();
        return power();
    }

    RatFn power() {
        RatFn base = primary();
        if (accept('^')) {
            unsigned long e = exponent();
            return base.pow(static_cast<long>(e));
        }
        return base;
    }

    unsigned long exponent() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a non-negative integer literal", at);
        unsigned long v = natural(at);
        if (accept('^')) {
            unsigned long e = exponent();
            unsigned long r = 1;
            for (unsigned long i = 0; i < e; ++i) {
                r *= v;
                if (r > (1ul << 20)) throw ParseError("exponent too large", at);
            }
            return r;
        }
        return v;
    }

    unsigned long natural(std::size_t at) {
        unsigned long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            if (v > (1ul << 20)) throw ParseError("integer literal too large", at);
            ++pos_;
        }
        return v;
    }

    RatFn primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            Integer v(0);
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_] - '0');
                ++pos_;
            }
            (void)at;
            return RatFn::constant(ring_, Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                name += src_[pos_];
                ++pos_;
            }
            auto idx = var_index(ring_, name);
            if (!idx) throw ParseError("unknown identifier '" + name + "'", at);
            return RatFn::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& src_;
    Ring ring_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(const std::string& src, const Ring& ring) { return Parser(src, ring).run(); }

}  // namespace unirat
