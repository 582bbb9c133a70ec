/*
   Copyright 2026 The hkfun authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HK_PARSE_HPP
#define HK_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "multipoly.hpp"

namespace hk {

/**
 * Parser for polynomials written as sums of c*v1^e1*...*vk^ek terms:
 * '^' for exponents, '*' required between factors, integer coefficients
 * (reduced mod p), '+'/'-' between terms. Example: "y^2*z - x^3 - x*z^2".
 */
class PolyParser {
public:
    PolyParser(std::string text, std::vector<std::string> vars, const PrimeField& f)
        : s_(std::move(text)), vars_(std::move(vars)), f_(f) {}

    MultiPoly parse() {
        MultiPoly poly(f_, vars_.size());
        skip_ws();
        if (eof()) fail("empty polynomial");
        bool first = true;
        while (!eof()) {
            std::int64_t sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            parse_term(poly, sign);
            skip_ws();
            first = false;
        }
        return poly;
    }

private:
    void parse_term(MultiPoly& poly, std::int64_t sign) {
        std::int64_t coeff = sign;
        std::vector<std::uint32_t> exps(vars_.size(), 0);
        bool more = true;
        while (more) {
            skip_ws();
            if (eof()) fail("unexpected end of input in a term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = static_cast<std::int64_t>(
                    f_.mul(f_.reduce(coeff), f_.reduce(parse_int())));
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                std::size_t v = parse_var();
                std::uint64_t e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_int();
                }
                if (e > 0xffffffffu || exps[v] + e > 0xffffffffu) fail("exponent too large");
                exps[v] += static_cast<std::uint32_t>(e);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
            } else {
                more = false;
            }
        }
        poly.add_term(Monomial(exps), coeff);
    }

    std::uint64_t parse_int() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (std::uint64_t{1} << 62)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    std::size_t parse_var() {
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (vars_[v] == name) return v;
        fail("unknown variable '" + name + "'");
        return 0;  // unreachable
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    std::string s_;
    std::vector<std::string> vars_;
    PrimeField f_;
    std::size_t pos_ = 0;
};

inline MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                            const PrimeField& f) {
    return PolyParser(text, vars, f).parse();
}

}  // namespace hk

#endif
