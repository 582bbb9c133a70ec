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

#ifndef HK_CUBICS_HPP
#define HK_CUBICS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fpmatrix.hpp"
#include "multipoly.hpp"

namespace hk {

enum class SingularType { Nodal, Cuspidal };

/// Nodal iff the tangential quadric Q(x,y) = y^2 + a1 x y - a2 x^2 has
/// distinct roots, i.e. a1^2 + 4 a2 != 0.
inline SingularType classify(const Fp& a1, const Fp& a2) {
    Fp four(4, a1.field());
    return (a1 * a1 + four * a2).is_zero() ? SingularType::Cuspidal : SingularType::Nodal;
}

/**
 * The singular Weierstrass cubic f = z(y^2 + a1 x y - a2 x^2) - x^3 with its
 * unique singular point at [0,0,1].
 */
class WeierstrassCubic {
public:
    WeierstrassCubic(const Fp& a1, const Fp& a2)
        : a1_(a1), a2_(a2), type_(hk::classify(a1, a2)) {}

    const Fp& a1() const { return a1_; }
    const Fp& a2() const { return a2_; }
    SingularType type() const { return type_; }

    /// y^2 z + a1 x y z - a2 x^2 z - x^3 in the variables (x, y, z).
    MultiPoly polynomial() const {
        const PrimeField& f = a1_.field();
        MultiPoly p(f, 3);
        p.add_term(Monomial({0, 2, 1}), 1);
        p.add_term(Monomial({1, 1, 1}), static_cast<std::int64_t>(a1_.value()));
        p.add_term(Monomial({2, 0, 1}), -static_cast<std::int64_t>(a2_.value()));
        p.add_term(Monomial({3, 0, 0}), -1);
        return p;
    }

    /// The coordinate change y -> y + alpha x; preserves the Weierstrass form
    /// and the discriminant a1^2 + 4 a2.
    WeierstrassCubic shift_y(const Fp& alpha) const {
        Fp two(2, a1_.field());
        return WeierstrassCubic(a1_ + two * alpha, a2_ - alpha * alpha - a1_ * alpha);
    }

private:
    Fp a1_, a2_;
    SingularType type_;
};

/// Roots u, v of Q(s,t) = (t - u s)(t - v s) = t^2 + a1 s t - a2 s^2; they lie
/// in the base field or in its quadratic extension.
struct QuadricRoots {
    QuadExt u, v;
};

inline QuadricRoots split_roots(const Fp& a1, const Fp& a2) {
    const PrimeField& f = a1.field();
    QuadExtField ext(f);
    auto embed = [&](const Fp& x) { return QuadExt(x, ext); };
    QuadExt u = embed(Fp(0, f)), v = u;
    if (f.modulus() == 2) {
        if (a1.is_zero()) {
            // t^2 + a2 s^2 = (t + sqrt(a2) s)^2 in characteristic 2
            u = v = embed(Fp(static_cast<std::int64_t>(f.sqrt(a2.value())), f));
        } else if (a2.is_zero()) {
            u = embed(Fp(0, f));
            v = embed(-a1);
        } else {
            // t = a1 T with T^2 + T + a2/a1^2 = 0; over F_2 that is T^2 + T + 1,
            // whose roots are w and w + 1
            QuadExt w = QuadExt::raw(0, 1, ext);
            u = embed(a1) * w;
            v = embed(a1) * (w + embed(Fp(1, f)));
        }
    } else {
        Fp disc = a1 * a1 + Fp(4, f) * a2;
        Fp half = Fp(2, f).inv();
        QuadExt s = embed(Fp(0, f));
        if (f.is_square(disc.value())) {
            s = embed(Fp(static_cast<std::int64_t>(f.sqrt(disc.value())), f));
        } else {
            // disc = delta * r^2, so sqrt(disc) = r w with w^2 = delta
            std::uint64_t r = f.sqrt(f.mul(disc.value(), f.inv(ext.delta())));
            s = QuadExt::raw(0, r, ext);
        }
        u = (embed(-a1) + s) * embed(half);
        v = (embed(-a1) - s) * embed(half);
    }
    // re-expansion (t - us)(t - vs) = t^2 + a1 s t - a2 s^2
    if (u + v != embed(-a1) || u * v != embed(-a2))
        throw Error("internal: quadric roots fail re-expansion");
    return {u, v};
}

/**
 * tau1 = -u v sum_{i=0}^{q-2} u^{q-2-i} v^i and
 * tau2 =      sum_{i=0}^{q-1} u^{q-1-i} v^i,
 * the coordinates of t^q mod Q(s,t) on s^q and s^{q-1} t.
 */
inline std::pair<QuadExt, QuadExt> tau(const QuadExt& u, const QuadExt& v, std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("tau requires q >= 1");
    const QuadExtField& ext = u.ext();
    QuadExt one = QuadExt::raw(1, 0, ext);
    QuadExt zero = QuadExt::raw(0, 0, ext);
    // homogeneous power sums S_m = sum_{i=0}^m u^{m-i} v^i via S_m = u S_{m-1} + v^m
    QuadExt s_prev = zero;  // S_{q-2}
    QuadExt s = one;        // S_0
    QuadExt vpow = one;
    for (std::uint64_t m = 1; m <= q - 1; ++m) {
        s_prev = s;
        vpow = vpow * v;
        s = u * s + vpow;
    }
    QuadExt tau1 = -(u * v) * s_prev;
    return {tau1, s};
}

namespace detail {
/// epsilon, eta, zeta in {0,1,2} making (q-3+eps)/3, (q-2+eta)/3, (2q-2+zeta)/3
/// integers.
struct GeneratorShifts {
    std::uint64_t eps, eta, zeta;
};
inline GeneratorShifts generator_shifts(std::uint64_t q) {
    std::uint64_t r = q % 3;
    return {(3 - r) % 3, (2 + 3 - r) % 3, (2 + r) % 3};
}
}  // namespace detail

/**
 * dim D = (2q - 5 + eps + eta)/3 when tau2 != 0 and (3q - 4 + eta + zeta)/3
 * when tau2 = 0, from the degrees of the three generators of the image of the
 * connecting map.
 */
inline std::uint64_t dim_D(bool tau2_is_zero, std::uint64_t q) {
    if (q < 2) throw PreconditionViolated("dim_D requires q >= 2");
    auto [eps, eta, zeta] = detail::generator_shifts(q);
    std::int64_t qi = static_cast<std::int64_t>(q);
    if (tau2_is_zero) {
        std::int64_t num = 3 * qi - 4 + static_cast<std::int64_t>(eta + zeta);
        if (num < 0 || num % 3 != 0) throw IntegralityError("dim D (tau2 = 0) is not an integer");
        return static_cast<std::uint64_t>(num / 3);
    }
    std::int64_t num = 2 * qi - 5 + static_cast<std::int64_t>(eps + eta);
    if (num < 0 || num % 3 != 0) throw IntegralityError("dim D (tau2 != 0) is not an integer");
    std::uint64_t dim = static_cast<std::uint64_t>(num / 3);
    // simplification: 2 floor(q/3) off the multiple-of-3 class, else 2q/3 - 1
    std::uint64_t simplified = q % 3 == 0 ? 2 * q / 3 - 1 : 2 * (q / 3);
    if (dim != simplified) throw IntegralityError("dim D disagrees with its simplification");
    return dim;
}

/// Closed form: dim F = 7/3 q^2 - 1/3 for q != 0 mod 3, else 7/3 q^2.
inline std::uint64_t dim_F(std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("dim_F requires q >= 1");
    std::uint64_t num = q % 3 == 0 ? 7 * q * q : 7 * q * q - 1;
    if (num % 3 != 0) throw IntegralityError("dim F is not an integer");
    return num / 3;
}

/**
 * dim F summed from the graded free resolution of M = k[s,t]/(s^q Q^q,
 * t^q Q^q, s^{3q}): dim M_{3i} = P(3i) - 3 P(3i-3q) + P(3i-4q) + P(3i-5q)
 * with P(j) = max(0, j+1).
 */
inline std::uint64_t dim_F_direct(std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("dim_F_direct requires q >= 1");
    auto P = [](std::int64_t j) { return j < -1 ? std::int64_t{0} : j + 1; };
    std::int64_t qi = static_cast<std::int64_t>(q);
    std::int64_t total = 0;
    for (std::int64_t i = 0; 3 * i <= 5 * qi; ++i) {
        std::int64_t j = 3 * i;
        std::int64_t term = P(j) - 3 * P(j - 3 * qi) + P(j - 4 * qi) + P(j - 5 * qi);
        if (term < 0) throw IntegralityError("negative slice in the resolution sum");
        total += term;
    }
    return static_cast<std::uint64_t>(total);
}

namespace detail {
/// Homogeneous bivariate polynomials over F_p as dense coefficient vectors
/// indexed by the power of t.
inline std::vector<std::uint64_t> biconv(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b,
                                         const PrimeField& F) {
    std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return c;
}
}  // namespace detail

/**
 * Per-degree dimensions of M = k[s,t]/(s^q Q^q, t^q Q^q, s^{3q}) for
 * j = 0..5q, computed by row reduction of the spanning sets in each degree.
 * An independent check of the resolution-based count; small q only.
 */
inline std::vector<std::uint64_t> module_dims_model(const Fp& a1, const Fp& a2, std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("module_dims_model requires q >= 1");
    if (q > 50) throw TooLarge("monomial model is intended for small q");
    const PrimeField& F = a1.field();
    std::vector<std::uint64_t> Q = {F.neg(a2.value()), a1.value(), 1};  // -a2 s^2 + a1 s t + t^2
    std::vector<std::uint64_t> Qq = {1};
    for (std::uint64_t i = 0; i < q; ++i) Qq = detail::biconv(Qq, Q, F);
    // generators of degree 3q: s^q Q^q, t^q Q^q, s^{3q}
    std::vector<std::vector<std::uint64_t>> gens(3);
    gens[0] = Qq;
    gens[0].resize(3 * q + 1, 0);  // multiply by s^q: t-powers unchanged
    gens[1].assign(3 * q + 1, 0);
    for (std::size_t k = 0; k < Qq.size(); ++k) gens[1][k + q] = Qq[k];  // multiply by t^q
    gens[2].assign(3 * q + 1, 0);
    gens[2][0] = 1;  // s^{3q}
    std::vector<std::uint64_t> dims;
    for (std::uint64_t j = 0; j <= 5 * q; ++j) {
        std::uint64_t dim = j + 1;
        if (j >= 3 * q) {
            RowReducer red(j + 1, F);
            std::vector<std::uint64_t> row(j + 1);
            for (const auto& g : gens)
                for (std::uint64_t shift_t = 0; shift_t <= j - 3 * q; ++shift_t) {
                    // multiply g by s^{j-3q-shift_t} t^{shift_t}
                    std::fill(row.begin(), row.end(), 0);
                    for (std::size_t k = 0; k < g.size(); ++k) row[k + shift_t] = g[k];
                    auto tmp = row;
                    red.insert(tmp);
                }
            dim -= red.rank();
        }
        dims.push_back(dim);
    }
    return dims;
}

/// dim F from the monomial model: the sum of dim M_j over j = 0 mod 3.
inline std::uint64_t dim_F_model(const Fp& a1, const Fp& a2, std::uint64_t q) {
    auto dims = module_dims_model(a1, a2, q);
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < dims.size(); j += 3) total += dims[j];
    return total;
}

/// Dimension bookkeeping for a singular Weierstrass cubic at q.
struct NodalDecomposition {
    std::uint64_t q = 0;
    QuadExt tau1, tau2;
    std::uint64_t dimF = 0, dimG = 0, dimD = 0;
    std::uint64_t hk_assembled = 0;
    std::uint64_t epsilon = 0, eta = 0, zeta = 0;
};

/**
 * HK value of z(y^2 + a1 x y - a2 x^2) - x^3 at q assembled as
 * dim F - dim G + dim D, with dim G = q and dim D decided by tau2.
 *
 * An optional coordinate change y -> y + alpha x is applied first; use
 * tau2_jump_probe to pick an alpha that avoids the tau2 = 0 jump at a
 * generalized q.
 */
inline NodalDecomposition hk_singular_assembled(const Fp& a1, const Fp& a2, std::uint64_t q,
                                                const std::optional<Fp>& alpha = {}) {
    if (q < 2) throw PreconditionViolated("hk_singular_assembled requires q >= 2");
    if (alpha) {
        WeierstrassCubic shifted = WeierstrassCubic(a1, a2).shift_y(*alpha);
        return hk_singular_assembled(shifted.a1(), shifted.a2(), q);
    }
    QuadricRoots roots = split_roots(a1, a2);
    NodalDecomposition dec;
    dec.q = q;
    std::tie(dec.tau1, dec.tau2) = tau(roots.u, roots.v, q);
    auto [eps, eta, zeta] = detail::generator_shifts(q);
    dec.epsilon = eps;
    dec.eta = eta;
    dec.zeta = zeta;
    dec.dimF = dim_F(q);
    dec.dimG = q;  // G = (k[z]/z^q)(-1)
    dec.dimD = dim_D(dec.tau2.is_zero(), q);
    dec.hk_assembled = dec.dimF - dec.dimG + dec.dimD;
    return dec;
}

/**
 * true iff u^q = v^q, i.e. tau2 = 0: for generalized q this is exactly when
 * the value of the nodal curve jumps up to the cuspidal one.
 */
inline bool tau2_jump_probe(const Fp& a1, const Fp& a2, std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("tau2_jump_probe requires q >= 1");
    if (classify(a1, a2) == SingularType::Cuspidal)
        throw CuspidalInput("tau2_jump_probe requires a nodal curve");
    QuadricRoots roots = split_roots(a1, a2);
    return roots.u.pow(q) == roots.v.pow(q);
}

}  // namespace hk

#endif
