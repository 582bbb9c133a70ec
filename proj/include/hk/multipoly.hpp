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

#ifndef HK_MULTIPOLY_HPP
#define HK_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace hk {

/// Multivariate polynomial over a prime field, stored as monomial -> nonzero
/// coefficient in decreasing grlex order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, std::uint64_t, MonomialGrlexGreater>;

    MultiPoly(const PrimeField& f, std::size_t num_vars) : f_(f), nvars_(num_vars) {}

    const PrimeField& field() const { return f_; }
    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, std::int64_t coeff) {
        if (m.num_vars() != nvars_) throw PreconditionViolated("monomial arity mismatch");
        std::uint64_t c = f_.reduce(coeff);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second = f_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint32_t d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Degree of a nonzero homogeneous polynomial.
    std::uint32_t degree() const {
        if (terms_.empty()) throw ZeroPolynomial("degree of the zero polynomial");
        return terms_.begin()->first.degree();
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, static_cast<std::int64_t>(c));
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(f_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(ma * mb, static_cast<std::int64_t>(f_.mul(ca, cb)));
        return r;
    }

    MultiPoly pow(std::uint32_t e) const {
        MultiPoly r = constant(f_, nvars_, 1);
        MultiPoly x = *this;
        while (e) {
            if (e & 1) r = r * x;
            if (e >>= 1) x = x * x;
        }
        return r;
    }

    /// Substitutes x_i -> sum_j a[i][j] x_j for an (nvars x nvars) matrix of
    /// canonical residues.
    MultiPoly substitute_linear(const std::vector<std::vector<std::uint64_t>>& a) const {
        std::vector<MultiPoly> images;
        images.reserve(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            MultiPoly li(f_, nvars_);
            for (std::size_t j = 0; j < nvars_; ++j) {
                std::vector<std::uint32_t> e(nvars_, 0);
                e[j] = 1;
                li.add_term(Monomial(e), static_cast<std::int64_t>(a[i][j]));
            }
            images.push_back(li);
        }
        MultiPoly r(f_, nvars_);
        for (const auto& [m, c] : terms_) {
            MultiPoly term = constant(f_, nvars_, static_cast<std::int64_t>(c));
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] > 0) term = term * images[i].pow(m[i]);
            r = r + term;
        }
        return r;
    }

    static MultiPoly constant(const PrimeField& f, std::size_t nvars, std::int64_t c) {
        MultiPoly r(f, nvars);
        r.add_term(Monomial(std::vector<std::uint32_t>(nvars, 0)), c);
        return r;
    }

    /// Canonical text form, e.g. "4*x^3 + 1*y^2*z".
    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                s += "*" + vars[i];
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

private:
    PrimeField f_;
    std::size_t nvars_;
    TermMap terms_;
};

}  // namespace hk

#endif
