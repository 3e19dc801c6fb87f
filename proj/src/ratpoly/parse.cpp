#include "kasym/ratpoly/parse.hpp"

#include <cctype>
#include <string>

#include "kasym/errors.hpp"

namespace kasym::ratpoly {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    CoeffPoly parse() {
        CoeffPoly r = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    CoeffPoly expr() {
        CoeffPoly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    CoeffPoly term() {
        CoeffPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const CoeffPoly d = unary();
                if (d.degree() != 0 || !d.coeff(0).is_constant()) fail("division by a non-constant");
                acc = acc.scaled(BigRational(1) / d.coeff(0).constant_term());
            } else if (starts_atom()) {
                acc *= unary();  // implicit product, e.g. "2b"
            } else {
                return acc;
            }
        }
    }

    bool starts_atom() {
        const char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    CoeffPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    CoeffPoly power() {
        CoeffPoly base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a non-negative integer");
        const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        CoeffPoly r(ParamPoly(1));
        for (int k = 0; k < e; ++k) r *= base;
        return r;
    }

    CoeffPoly atom() {
        skip_space();
        if (accept('(')) {
            CoeffPoly r = expr();
            if (!accept(')')) fail("missing ')'");
            return r;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return CoeffPoly(ParamPoly(number()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (id == "z") return CoeffPoly::monomial(ParamPoly(1), 1);
            if (id == "z2") return CoeffPoly::monomial(ParamPoly(1), 2);
            if (id == "mu") return CoeffPoly(ParamPoly::variable(Param::Mu));
            if (id == "b") return CoeffPoly(ParamPoly::variable(Param::B));
            pos_ = start;
            fail("unknown symbol '" + std::string(id) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    BigRational number() {
        mpz_class num = 0;
        mpz_class den = 1;
        bool point = false;
        bool any = false;
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '.' && !point) {
                point = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                num = num * 10 + (c - '0');
                if (point) den *= 10;
                any = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (!any) fail("malformed number");
        BigRational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

CoeffPoly parse_coeff_poly(std::string_view text) {
    const CoeffPoly p = Parser(text).parse();
    return p.with_parity(p.actual_parity());
}

ParamPoly parse_param_poly(std::string_view text) {
    const CoeffPoly p = Parser(text).parse();
    if (p.degree() > 0) throw ParseError("'" + std::string(text) + "' must not depend on z");
    return p.coeff(0);
}

}  // namespace kasym::ratpoly
