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

#ifndef HK_POLY_HPP
#define HK_POLY_HPP

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "rational.hpp"

namespace hk {

/// Coefficient ring of exact rationals.
struct RationalRing {
    using value_type = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational neg(const Rational& a) const { return -a; }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
    bool eq(const Rational& a, const Rational& b) const { return a == b; }
    Rational exact_div(const Rational& a, const Rational& b) const { return a / b; }
    bool operator==(const RationalRing&) const { return true; }
};

/// Coefficient ring of arbitrary-precision integers; division must be exact.
struct IntRing {
    using value_type = BigInt;
    BigInt zero() const { return 0; }
    BigInt one() const { return 1; }
    BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
    BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt neg(const BigInt& a) const { return -a; }
    bool is_zero(const BigInt& a) const { return a == 0; }
    bool eq(const BigInt& a, const BigInt& b) const { return a == b; }
    BigInt exact_div(const BigInt& a, const BigInt& b) const {
        BigInt q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (r != 0) throw Error("internal: inexact integer division");
        return q;
    }
    bool operator==(const IntRing&) const { return true; }
};

/// Coefficient field F_p with canonical residues.
struct FpRing {
    PrimeField F;
    using value_type = std::uint64_t;
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return F.add(a, b); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return F.sub(a, b); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return F.mul(a, b); }
    std::uint64_t neg(std::uint64_t a) const { return F.neg(a); }
    bool is_zero(std::uint64_t a) const { return a == 0; }
    bool eq(std::uint64_t a, std::uint64_t b) const { return a == b; }
    std::uint64_t exact_div(std::uint64_t a, std::uint64_t b) const { return F.mul(a, F.inv(b)); }
    bool operator==(const FpRing& o) const { return F == o.F; }
};

/// Dense univariate polynomial over a commutative coefficient ring.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
template <class R>
class Poly {
public:
    using V = typename R::value_type;

    explicit Poly(const R& ring) : r_(ring) {}
    Poly(const R& ring, std::vector<V> coeffs) : r_(ring), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const R& ring) { return Poly(ring); }
    static Poly constant(const R& ring, const V& v) { return Poly(ring, {v}); }
    static Poly monomial(const R& ring, const V& v, std::size_t deg) {
        std::vector<V> c(deg + 1, ring.zero());
        c[deg] = v;
        return Poly(ring, std::move(c));
    }

    const R& ring() const { return r_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<V>& coeffs() const { return c_; }
    V coeff(std::size_t i) const { return i < c_.size() ? c_[i] : r_.zero(); }
    const V& leading() const { return c_.back(); }

    Poly operator+(const Poly& o) const {
        std::vector<V> c(std::max(c_.size(), o.c_.size()), r_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = r_.add(coeff(i), o.coeff(i));
        return Poly(r_, std::move(c));
    }
    Poly operator-(const Poly& o) const {
        std::vector<V> c(std::max(c_.size(), o.c_.size()), r_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = r_.sub(coeff(i), o.coeff(i));
        return Poly(r_, std::move(c));
    }
    Poly operator-() const {
        std::vector<V> c = c_;
        for (auto& x : c) x = r_.neg(x);
        return Poly(r_, std::move(c));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(r_);
        std::vector<V> c(c_.size() + o.c_.size() - 1, r_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (r_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = r_.add(c[i + j], r_.mul(c_[i], o.c_[j]));
        }
        return Poly(r_, std::move(c));
    }
    Poly scale(const V& v) const {
        if (r_.is_zero(v)) return zero(r_);
        std::vector<V> c = c_;
        for (auto& x : c) x = r_.mul(x, v);
        return Poly(r_, std::move(c));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!r_.eq(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(std::uint64_t e) const {
        Poly res = constant(r_, r_.one());
        Poly x = *this;
        while (e) {
            if (e & 1) res = res * x;
            if (e >>= 1) x = x * x;
        }
        return res;
    }

    V eval(const V& x) const {
        V acc = r_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = r_.add(r_.mul(acc, x), c_[i]);
        return acc;
    }

    /// Long division by an exact divisor; throws if the division fails
    /// (which also certifies the Bareiss invariant at each elimination step).
    Poly exact_div(const Poly& o) const {
        if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (is_zero()) return zero(r_);
        if (degree() < o.degree()) throw Error("internal: inexact polynomial division");
        std::vector<V> rem = c_;
        std::vector<V> quo(c_.size() - o.c_.size() + 1, r_.zero());
        for (std::size_t k = quo.size(); k-- > 0;) {
            V q = r_.exact_div(rem[k + o.c_.size() - 1], o.leading());
            quo[k] = q;
            if (!r_.is_zero(q))
                for (std::size_t j = 0; j < o.c_.size(); ++j)
                    rem[k + j] = r_.sub(rem[k + j], r_.mul(q, o.c_[j]));
        }
        for (const auto& x : rem)
            if (!r_.is_zero(x)) throw Error("internal: inexact polynomial division");
        return Poly(r_, std::move(quo));
    }

private:
    void trim() {
        while (!c_.empty() && r_.is_zero(c_.back())) c_.pop_back();
    }

    R r_;
    std::vector<V> c_;
};

using RationalPoly = Poly<RationalRing>;
using IntPoly = Poly<IntRing>;
using FpPoly = Poly<FpRing>;

/**
 * Determinant of a square polynomial matrix by fraction-free (Bareiss)
 * elimination with row pivoting; all divisions are exact in the coefficient
 * ring of the entries.
 */
template <class R>
Poly<R> bareiss_det(std::vector<std::vector<Poly<R>>> a, const R& ring) {
    const std::size_t n = a.size();
    if (n == 0) return Poly<R>::constant(ring, ring.one());
    bool negate = false;
    Poly<R> prev = Poly<R>::constant(ring, ring.one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return Poly<R>::zero(ring);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace hk

#endif
