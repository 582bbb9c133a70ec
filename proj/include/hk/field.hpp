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

#ifndef HK_FIELD_HPP
#define HK_FIELD_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace hk {

/**
 * Prime field F_p for a machine-word prime p (p < 2^31 so that sums and
 * products of canonical representatives fit in unsigned 64-bit arithmetic).
 *
 * A PrimeField is a small value type; two instances with the same modulus
 * denote the same field. All representatives are canonical in [0, p).
 */
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 31)) throw TooLarge("modulus must be < 2^31");
        if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    // Arithmetic on canonical representatives.
    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p_, x = a % p_;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    /// Euler criterion; 0 counts as a square.
    bool is_square(std::uint64_t a) const {
        a %= p_;
        if (a == 0 || p_ == 2) return true;
        return pow(a, (p_ - 1) / 2) == 1;
    }

    /// Square root of a quadratic residue by Tonelli-Shanks. Requires is_square(a).
    std::uint64_t sqrt(std::uint64_t a) const {
        a %= p_;
        if (a == 0) return 0;
        if (p_ == 2) return a;
        if (!is_square(a)) throw PreconditionViolated("sqrt of a non-residue");
        if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
        // p = 1 mod 4: Tonelli-Shanks
        std::uint64_t s = 0, q = p_ - 1;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (is_square(z)) ++z;
        std::uint64_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
        while (t != 1) {
            std::uint64_t i = 0, tt = t;
            while (tt != 1) {
                tt = mul(tt, tt);
                ++i;
            }
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return r;
    }

    /// Smallest quadratic non-residue >= 2. Only defined for odd p.
    std::uint64_t smallest_nonresidue() const {
        if (p_ == 2) throw PreconditionViolated("F_2 has no quadratic non-residue");
        for (std::uint64_t d = 2;; ++d)
            if (!is_square(d)) return d;
    }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

/// An element of a prime field; carries its field by value.
class Fp {
public:
    Fp() : v_(0), f_(PrimeField(2)) {}
    Fp(std::int64_t v, const PrimeField& f) : v_(f.reduce(v)), f_(f) {}

    std::uint64_t value() const { return v_; }
    const PrimeField& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { return raw(f_.add(v_, same(o)), f_); }
    Fp operator-(const Fp& o) const { return raw(f_.sub(v_, same(o)), f_); }
    Fp operator*(const Fp& o) const { return raw(f_.mul(v_, same(o)), f_); }
    Fp operator/(const Fp& o) const { return raw(f_.mul(v_, f_.inv(same(o))), f_); }
    Fp operator-() const { return raw(f_.neg(v_), f_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(std::uint64_t e) const { return raw(f_.pow(v_, e), f_); }
    Fp inv() const { return raw(f_.inv(v_), f_); }

    static Fp raw(std::uint64_t canonical, const PrimeField& f) {
        Fp x;
        x.v_ = canonical;
        x.f_ = f;
        return x;
    }

private:
    std::uint64_t same(const Fp& o) const {
        if (f_ != o.f_) throw FieldMismatch("elements of different prime fields");
        return o.v_;
    }

    std::uint64_t v_;
    PrimeField f_;
};

/**
 * Quadratic extension F_p[w] with w^2 = c1*w + c0 for a monic irreducible
 * t^2 - c1*t - c0 over F_p. For odd p the defining relation is w^2 = delta
 * with delta the smallest quadratic non-residue >= 2; for p = 2 it is
 * w^2 = w + 1. Elements are written a + b*w.
 */
class QuadExtField {
public:
    explicit QuadExtField(const PrimeField& base) : f_(base) {
        if (base.modulus() == 2) {
            // t^2 + t + 1, the unique irreducible monic quadratic over F_2
            c1_ = 1;
            c0_ = 1;
        } else {
            // t^2 - delta is irreducible exactly because delta is a non-residue
            c1_ = 0;
            c0_ = base.smallest_nonresidue();
        }
    }

    const PrimeField& base() const { return f_; }
    std::uint64_t c0() const { return c0_; }
    std::uint64_t c1() const { return c1_; }
    /// The constant delta with w^2 = delta (odd p only).
    std::uint64_t delta() const {
        if (c1_ != 0) throw PreconditionViolated("extension is not of Kummer form");
        return c0_;
    }

    bool operator==(const QuadExtField& o) const {
        return f_ == o.f_ && c0_ == o.c0_ && c1_ == o.c1_;
    }
    bool operator!=(const QuadExtField& o) const { return !(*this == o); }

private:
    PrimeField f_;
    std::uint64_t c0_, c1_;
};

/// Element a + b*w of a quadratic extension of F_p.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), e_(QuadExtField(PrimeField(3))) {}
    QuadExt(const Fp& a, const Fp& b, const QuadExtField& e)
        : a_(a.value()), b_(b.value()), e_(e) {
        if (a.field() != e.base() || b.field() != e.base())
            throw FieldMismatch("components from a different base field");
    }
    /// Embeds a base-field element.
    QuadExt(const Fp& a, const QuadExtField& e) : QuadExt(a, Fp(0, e.base()), e) {}

    Fp a() const { return Fp::raw(a_, e_.base()); }
    Fp b() const { return Fp::raw(b_, e_.base()); }
    const QuadExtField& ext() const { return e_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_base() const { return b_ == 0; }

    QuadExt operator+(const QuadExt& o) const {
        check(o);
        const PrimeField& f = e_.base();
        return raw(f.add(a_, o.a_), f.add(b_, o.b_), e_);
    }
    QuadExt operator-(const QuadExt& o) const {
        check(o);
        const PrimeField& f = e_.base();
        return raw(f.sub(a_, o.a_), f.sub(b_, o.b_), e_);
    }
    QuadExt operator-() const {
        const PrimeField& f = e_.base();
        return raw(f.neg(a_), f.neg(b_), e_);
    }
    QuadExt operator*(const QuadExt& o) const {
        // (a + bw)(c + dw) = ac + c0*bd + (ad + bc + c1*bd) w
        check(o);
        const PrimeField& f = e_.base();
        std::uint64_t bd = f.mul(b_, o.b_);
        std::uint64_t ra = f.add(f.mul(a_, o.a_), f.mul(e_.c0(), bd));
        std::uint64_t rb = f.add(f.add(f.mul(a_, o.b_), f.mul(b_, o.a_)), f.mul(e_.c1(), bd));
        return raw(ra, rb, e_);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    bool operator==(const QuadExt& o) const { return e_ == o.e_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt pow(std::uint64_t e) const {
        QuadExt r = raw(1, 0, e_), x = *this;
        while (e) {
            if (e & 1) r = r * x;
            x = x * x;
            e >>= 1;
        }
        return r;
    }

    static QuadExt raw(std::uint64_t a, std::uint64_t b, const QuadExtField& e) {
        QuadExt x;
        x.a_ = a;
        x.b_ = b;
        x.e_ = e;
        return x;
    }

private:
    void check(const QuadExt& o) const {
        if (e_ != o.e_) throw FieldMismatch("elements of different quadratic extensions");
    }

    std::uint64_t a_, b_;
    QuadExtField e_;
};

}  // namespace hk

#endif
