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

#ifndef HK_SERIES_HPP
#define HK_SERIES_HPP

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace hk {

/// C(a, k) for integer a (possibly negative in the falling-factorial sense is
/// not needed here: a < k, and in particular a < 0, yields 0). Exact.
inline BigInt binomial(std::int64_t a, unsigned k) {
    if (a < 0 || static_cast<std::uint64_t>(a) < k) return 0;
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= a - static_cast<std::int64_t>(k) + static_cast<std::int64_t>(j);
        r /= j;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

/// Truncated integer power series (dense coefficients from degree 0).
class IntSeries {
public:
    explicit IntSeries(std::size_t bound) : c_(bound + 1, BigInt(0)) {}

    std::size_t bound() const { return c_.size() - 1; }
    BigInt& operator[](std::size_t i) { return c_[i]; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    /// this *= (1 - t^k), truncated.
    void mul_one_minus_power(std::size_t k) {
        if (k > bound()) return;
        for (std::size_t i = bound(); i + 1 >= k + 1; --i) c_[i] -= c_[i - k];
    }

    /// this *= (1 - t^k)^e, truncated.
    void mul_one_minus_power(std::size_t k, unsigned e) {
        for (unsigned j = 0; j < e; ++j) mul_one_minus_power(k);
    }

    static IntSeries inverse_power_of_one_minus_t(unsigned e, std::size_t bound) {
        // 1/(1-t)^e = sum C(i+e-1, e-1) t^i
        IntSeries s(bound);
        for (std::size_t i = 0; i <= bound; ++i)
            s[i] = binomial(static_cast<std::int64_t>(i) + e - 1, e - 1);
        return s;
    }

private:
    std::vector<BigInt> c_;
};

/**
 * Coefficient of t^i in (1 + t + ... + t^{q-1})^{n+1}, i.e. the dimension of
 * the degree-i slice of k[x_0..x_n]/(x_0^q,..,x_n^q), via inclusion-exclusion:
 * sum_j (-1)^j C(n+1, j) C(i - j q + n, n).
 */
inline BigInt theta_dim(unsigned n, std::uint64_t q, std::int64_t i) {
    if (q < 1) throw PreconditionViolated("theta_dim requires q >= 1");
    if (i < 0) return 0;
    std::int64_t l = static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(q) - 1);
    if (i > l) return 0;
    BigInt acc = 0;
    for (unsigned j = 0; j <= n + 1; ++j) {
        std::int64_t a = i - static_cast<std::int64_t>(j * q) + n;
        if (a < static_cast<std::int64_t>(n)) break;  // terms vanish from here on
        BigInt term = binomial(static_cast<std::int64_t>(n) + 1, j) * binomial(a, n);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// m(q) = floor(((n+1)(q-1) + (d-1)) / 2).
inline std::uint64_t m_of_q(unsigned n, unsigned d, std::uint64_t q) {
    if (n < 1 || d < 1 || q < 1) throw PreconditionViolated("m_of_q requires n, d, q >= 1");
    return (static_cast<std::uint64_t>(n + 1) * (q - 1) + (d - 1)) / 2;
}

/**
 * The universal lower bound L(q): the coefficient of t^{m(q)} in
 * (1 - t^d)(1 - t^q)^{n+1} / (1 - t)^{n+2}, by truncated series multiplication.
 */
inline BigInt lower_bound_L(unsigned n, unsigned d, std::uint64_t q) {
    std::uint64_t m = m_of_q(n, d, q);
    IntSeries s = IntSeries::inverse_power_of_one_minus_t(n + 2, m);
    s.mul_one_minus_power(d);
    s.mul_one_minus_power(q, n + 1);
    return s[m];
}

/**
 * beta_{n+1} = (1 / (2^n n!)) sum_{i=0}^{floor(n/2)} (-1)^i (n+1-2i)^n C(n+1, i).
 * The sequence starts 1, 1, 3/4, 2/3, 115/192, 11/20 and decreases to zero.
 */
inline Rational beta(unsigned n_plus_1) {
    if (n_plus_1 < 1) throw PreconditionViolated("beta requires index >= 1");
    unsigned n = n_plus_1 - 1;
    BigInt acc = 0;
    for (unsigned i = 0; 2 * i <= n; ++i) {
        BigInt base = static_cast<std::int64_t>(n) + 1 - 2 * static_cast<std::int64_t>(i);
        BigInt term = binomial(static_cast<std::int64_t>(n) + 1, i);
        for (unsigned j = 0; j < n; ++j) term *= base;
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    BigInt denom = 1;
    denom <<= n;  // 2^n
    for (unsigned j = 2; j <= n; ++j) denom *= j;
    return Rational(acc, denom);
}

/// |L(q)/q^n - d*beta_{n+1}| as an exact rational.
inline Rational beta_limit_gap(unsigned n, unsigned d, std::uint64_t q) {
    if (n < 1 || d < 2 || q < 1)
        throw PreconditionViolated("beta_limit_gap requires n >= 1, d >= 2, q >= 1");
    BigInt qn = 1;
    for (unsigned j = 0; j < n; ++j) qn *= q;
    Rational lhs(lower_bound_L(n, d, q), qn);
    Rational rhs = Rational(static_cast<long>(d)) * beta(n + 1);
    return (lhs - rhs).abs();
}

}  // namespace hk

#endif
