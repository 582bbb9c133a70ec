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

#ifndef HK_HANKEL_HPP
#define HK_HANKEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fpmatrix.hpp"
#include "poly.hpp"

namespace hk {

/**
 * Legendre polynomials P_0..P_N in exact rational arithmetic via the
 * three-term recurrence (m+1) P_{m+1} = (2m+1) t P_m - m P_{m-1}; they are
 * the coefficients of the expansion of (1 - 2 t x + x^2)^{-1/2} in x.
 */
inline std::vector<RationalPoly> legendre(std::size_t N) {
    RationalRing R;
    RationalPoly t = RationalPoly::monomial(R, Rational(1), 1);
    std::vector<RationalPoly> P;
    P.reserve(N + 1);
    P.push_back(RationalPoly::constant(R, Rational(1)));
    if (N >= 1) P.push_back(t);
    for (std::size_t m = 1; m < N; ++m) {
        long mi = static_cast<long>(m);
        RationalPoly next = (t * P[m]).scale(Rational(2 * mi + 1, mi + 1)) -
                            P[m - 1].scale(Rational(mi, mi + 1));
        P.push_back(next);
    }
    return P;
}

namespace detail {

/// Truncated product of power series in x with polynomial coefficients.
inline std::vector<RationalPoly> series_mul(const std::vector<RationalPoly>& a,
                                            const std::vector<RationalPoly>& b, std::size_t len) {
    RationalRing R;
    std::vector<RationalPoly> c(len, RationalPoly::zero(R));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

/// Full product of polynomials in x with F_p[t] coefficients.
inline std::vector<FpPoly> series_mul_fp(const std::vector<FpPoly>& a,
                                         const std::vector<FpPoly>& b, const FpRing& ring) {
    std::vector<FpPoly> c(a.size() + b.size() - 1, FpPoly::zero(ring));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

}  // namespace detail

/**
 * P_0..P_N extracted from the formal expansion of (1 - 2 t x + x^2)^{-1/2}
 * computed with Newton iteration Z <- Z (3 - A Z^2)/2; an independent route
 * against which the recurrence is validated.
 */
inline std::vector<RationalPoly> legendre_by_series(std::size_t N) {
    RationalRing R;
    const std::size_t len = N + 1;
    std::vector<RationalPoly> A = {RationalPoly::constant(R, Rational(1)),
                                   RationalPoly::monomial(R, Rational(-2), 1),
                                   RationalPoly::constant(R, Rational(1))};
    std::vector<RationalPoly> Z = {RationalPoly::constant(R, Rational(1))};
    std::size_t prec = 1;
    while (prec < len) {
        prec = std::min(2 * prec, len);
        auto Z2 = detail::series_mul(Z, Z, prec);
        auto AZ2 = detail::series_mul(A, Z2, prec);
        std::vector<RationalPoly> W(prec, RationalPoly::zero(R));
        for (std::size_t i = 0; i < prec; ++i) {
            RationalPoly w = i < AZ2.size() ? -AZ2[i] : RationalPoly::zero(R);
            if (i == 0) w = w + RationalPoly::constant(R, Rational(3));
            W[i] = w;
        }
        Z = detail::series_mul(Z, W, prec);
        for (auto& z : Z) z = z.scale(Rational(1, 2));
    }
    Z.resize(len, RationalPoly::zero(R));
    return Z;
}

/**
 * The companion sequence: coefficients of (1 - 2 t x + x^2)^{1/2}, computed
 * as the multiplicative series inverse of sum P_n x^n.
 */
inline std::vector<RationalPoly> tilde_legendre(std::size_t N) {
    RationalRing R;
    std::vector<RationalPoly> P = legendre(N);
    std::vector<RationalPoly> T;
    T.reserve(N + 1);
    T.push_back(RationalPoly::constant(R, Rational(1)));
    for (std::size_t n = 1; n <= N; ++n) {
        RationalPoly acc = RationalPoly::zero(R);
        for (std::size_t j = 1; j <= n; ++j) acc = acc + P[j] * T[n - j];
        T.push_back(-acc);
    }
    return T;
}

/**
 * Exact determinant of the k x k Hankel matrix with entry (i,j) =
 * seq[offset + i + j]. Rows are scaled to integer polynomials and eliminated
 * fraction-free (Bareiss); the scale is divided back out at the end.
 */
inline RationalPoly hankel_det(const std::vector<RationalPoly>& seq, std::size_t offset,
                               std::size_t k) {
    if (k < 1) throw PreconditionViolated("hankel_det requires size >= 1");
    if (seq.size() < offset + 2 * (k - 1) + 1)
        throw PreconditionViolated("sequence too short for the requested Hankel determinant");
    RationalRing R;
    IntRing Z;
    std::vector<std::vector<IntPoly>> m(k, std::vector<IntPoly>(k, IntPoly::zero(Z)));
    BigInt scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt L = 1;
        for (std::size_t j = 0; j < k; ++j)
            for (const Rational& c : seq[offset + i + j].coeffs())
                L = boost::multiprecision::lcm(L, c.den());
        for (std::size_t j = 0; j < k; ++j) {
            const RationalPoly& e = seq[offset + i + j];
            std::vector<BigInt> coeffs(e.coeffs().size());
            for (std::size_t c = 0; c < coeffs.size(); ++c)
                coeffs[c] = e.coeffs()[c].num() * (L / e.coeffs()[c].den());
            m[i][j] = IntPoly(Z, std::move(coeffs));
        }
        scale *= L;
    }
    IntPoly det = bareiss_det(std::move(m), Z);
    std::vector<Rational> out(det.coeffs().size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = Rational(det.coeffs()[c], scale);
    return RationalPoly(R, std::move(out));
}

namespace detail {

inline std::uint64_t mod_of(const BigInt& v, const PrimeField& F) {
    BigInt r = v % static_cast<std::int64_t>(F.modulus());
    if (r < 0) r += static_cast<std::int64_t>(F.modulus());
    return r.convert_to<std::uint64_t>();
}

inline FpPoly reduce_mod(const RationalPoly& p, const FpRing& ring) {
    std::vector<std::uint64_t> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational& x = p.coeffs()[i];
        std::uint64_t den = mod_of(x.den(), ring.F);
        c[i] = ring.F.mul(mod_of(x.num(), ring.F), ring.F.inv(den));
    }
    return FpPoly(ring, std::move(c));
}

/// (t^2 - 1)^e scaled by sign / 2^{two_power}, over Q.
inline RationalPoly hankel_rhs_q(std::uint64_t e, std::uint64_t two_power, int sign) {
    RationalRing R;
    RationalPoly base(R, {Rational(-1), Rational(0), Rational(1)});
    BigInt denom = 1;
    denom <<= two_power;
    return base.pow(e).scale(Rational(BigInt(sign), denom));
}

inline bool hankel_identity_mod(const std::vector<RationalPoly>& seq, std::size_t offset,
                                std::size_t k, const RationalPoly& rhs, std::uint64_t p) {
    if (p == 2) throw EvenModulus("the identities need 2 to be a unit");
    FpRing ring{PrimeField(p)};
    std::vector<std::vector<FpPoly>> m(k, std::vector<FpPoly>(k, FpPoly::zero(ring)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = reduce_mod(seq[offset + i + j], ring);
    return bareiss_det(std::move(m), ring) == reduce_mod(rhs, ring);
}

}  // namespace detail

/**
 * The Hankel determinant identity for Legendre polynomials:
 * D_k^{(0)}(P_i) = 2^{-(k-1)^2} (t^2 - 1)^{(k-1)k/2}, checked exactly over Q,
 * or over F_p after reducing the entries (any odd prime p).
 */
inline bool geronimus_check(std::size_t k, std::optional<std::uint64_t> modulus = {}) {
    if (k < 1) throw PreconditionViolated("geronimus_check requires k >= 1");
    std::vector<RationalPoly> P = legendre(2 * k - 2);
    RationalPoly rhs =
        detail::hankel_rhs_q((k - 1) * k / 2, (k - 1) * (k - 1), 1);
    if (modulus) return detail::hankel_identity_mod(P, 0, k, rhs, *modulus);
    return hankel_det(P, 0, k) == rhs;
}

/**
 * The companion identity D_k^{(2)}(tilde P_i) = (-2)^{-k^2}
 * (t^2 - 1)^{k(k+1)/2}, checked over Q or over F_p after reduction.
 */
inline bool corollary_check(std::size_t k, std::optional<std::uint64_t> modulus = {}) {
    if (k < 1) throw PreconditionViolated("corollary_check requires k >= 1");
    std::vector<RationalPoly> T = tilde_legendre(2 * k);
    RationalPoly rhs = detail::hankel_rhs_q(k * (k + 1) / 2, k * k, k % 2 == 0 ? 1 : -1);
    if (modulus) return detail::hankel_identity_mod(T, 2, k, rhs, *modulus);
    return hankel_det(T, 2, k) == rhs;
}

/// Coefficients over F_p[t] of (1 - 2 t x + x^2)^{(q+1)/2} (kind 'e') or
/// (1 - 2 t x + x^2)^{(q-1)/2} (kind 'h'), indexed by the power of x.
struct ExpansionCoeffs {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    char kind = 'h';
    std::vector<FpPoly> coeff;
};

inline ExpansionCoeffs expansion_coeffs(std::uint64_t p, std::uint64_t q, char kind) {
    if (p == 2) throw BadCharacteristic("expansions are defined in odd characteristic");
    PrimeField F(p);
    std::uint64_t r = q;
    while (r > 1 && r % p == 0) r /= p;
    if (r != 1 || q < 1) throw BadCharacteristic("q must be a power of p");
    if (kind != 'e' && kind != 'h') throw PreconditionViolated("kind must be 'e' or 'h'");
    std::uint64_t exponent = kind == 'e' ? (q + 1) / 2 : (q - 1) / 2;

    FpRing ring{F};
    std::vector<FpPoly> base = {FpPoly::constant(ring, 1),
                                FpPoly::monomial(ring, F.neg(2 % p), 1),
                                FpPoly::constant(ring, 1)};
    std::vector<FpPoly> acc = {FpPoly::constant(ring, 1)};
    for (std::uint64_t i = 0; i < exponent; ++i)
        acc = detail::series_mul_fp(acc, base, ring);
    ExpansionCoeffs out;
    out.p = p;
    out.q = q;
    out.kind = kind;
    out.coeff = std::move(acc);
    out.coeff.resize(2 * exponent + 1, FpPoly::zero(ring));
    if (!(out.coeff.back() == FpPoly::constant(ring, 1)))
        throw Error("internal: expansion is not monic in x");
    return out;
}

/**
 * The two syzygy rank conditions behind the minimal socle degree of an
 * elliptic curve for q = 1 mod 4: with l = (q-1)/2, E is the (l/2) x (l/2-1)
 * Hankel matrix of e_2..e_{l-1} and H the (l/2+2) x (l/2) Hankel matrix of
 * h_0..h_l; both must have full column rank at any t with t^2 != 1.
 */
inline bool syzygy_rank_check(std::uint64_t p, std::uint64_t q, const Fp& t_val) {
    if (q % 4 != 1 || q == 1) throw BadCongruence("q must be a power of p with q = 1 mod 4");
    PrimeField F(p);
    if (t_val.field() != F) throw FieldMismatch("t lives in a different field");
    if ((t_val * t_val) == Fp(1, F)) throw BadParameter("t^2 = 1 is excluded");
    ExpansionCoeffs e = expansion_coeffs(p, q, 'e');
    ExpansionCoeffs h = expansion_coeffs(p, q, 'h');
    std::uint64_t l = (q - 1) / 2;  // q >= 5, so l/2 >= 1
    FpMatrix E(l / 2, l / 2 - 1, F);
    for (std::size_t i = 0; i < E.rows(); ++i)
        for (std::size_t j = 0; j < E.cols(); ++j)
            E.at(i, j) = e.coeff[2 + i + j].eval(t_val.value());
    FpMatrix H(l / 2 + 2, l / 2, F);
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j)
            H.at(i, j) = h.coeff[i + j].eval(t_val.value());
    return rank(E) == E.cols() && rank(H) == H.cols();
}

}  // namespace hk

#endif
