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

#ifndef HK_MONOMIAL_HPP
#define HK_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace hk {

/// Exponent vector of a monomial; the degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

    std::size_t num_vars() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const {
        std::vector<std::uint32_t> e(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + o.e_[i];
        return Monomial(std::move(e));
    }

    bool any_exponent_at_least(std::uint32_t q) const {
        for (auto x : e_)
            if (x >= q) return true;
        return false;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

/// Graded lexicographic with x_0 > x_1 > ...; within equal degree this is
/// plain lex on the exponent vector.
struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.exponents() > b.exponents();
    }
};

/// All monomials in `nvars` variables of total degree `deg` with every
/// exponent < cap, in decreasing lex order. cap = 0 means unbounded.
inline std::vector<Monomial> enumerate_monomials(std::size_t nvars, std::uint32_t deg,
                                                 std::uint32_t cap = 0) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t rem) -> void {
        if (var + 1 == nvars) {
            if (cap != 0 && rem >= cap) return;
            cur[var] = rem;
            out.emplace_back(cur);
            return;
        }
        std::uint32_t hi = cap != 0 && rem >= cap ? cap - 1 : rem;
        for (std::uint32_t e = hi;; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
            if (e == 0) break;
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, deg);
    return out;
}

}  // namespace hk

#endif
