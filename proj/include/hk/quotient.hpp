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

#ifndef HK_QUOTIENT_HPP
#define HK_QUOTIENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fpmatrix.hpp"
#include "multipoly.hpp"
#include "series.hpp"

namespace hk {

/**
 * Basis of the degree-i slice of Theta = S/(x_0^q,..,x_n^q): all monomials of
 * degree i in n+1 variables with every exponent < q, in decreasing grlex
 * order. Empty when i < 0 or i > (n+1)(q-1).
 */
inline std::vector<Monomial> slice_basis(unsigned n, std::uint64_t q, std::int64_t i) {
    if (q < 1) throw PreconditionViolated("slice_basis requires q >= 1");
    std::int64_t l = static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(q) - 1);
    if (i < 0 || i > l) return {};
    return enumerate_monomials(n + 1, static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(q));
}

/// Position of m in a decreasing-grlex sorted basis; basis.size() if absent.
inline std::size_t slice_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, MonomialGrlexGreater{});
    if (it == basis.end() || *it != m) return basis.size();
    return static_cast<std::size_t>(it - basis.begin());
}

/**
 * Matrix of multiplication by a homogeneous f from Theta_{i-d} to Theta_i in
 * the slice bases: column m holds f*m with every term with an exponent >= q
 * dropped.
 */
inline FpMatrix mult_matrix(const MultiPoly& f, std::uint64_t q, std::int64_t i) {
    if (!f.is_homogeneous()) throw NotHomogeneous("multiplication by a non-homogeneous form");
    if (f.is_zero()) throw ZeroPolynomial("multiplication by the zero polynomial");
    unsigned n = static_cast<unsigned>(f.num_vars()) - 1;
    std::int64_t d = f.degree();
    std::vector<Monomial> target = slice_basis(n, q, i);
    std::vector<Monomial> source = slice_basis(n, q, i - d);
    FpMatrix a(target.size(), source.size(), f.field());
    for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [nu, coeff] : f.terms()) {
            Monomial prod = nu * source[c];
            if (prod.any_exponent_at_least(static_cast<std::uint32_t>(q))) continue;
            a.at(slice_index(target, prod), c) = coeff;
        }
    return a;
}

/// Coefficients of (1 + t + ... + t^{q-1})^{nvars} as machine integers.
inline std::vector<std::uint64_t> theta_dims_vector(std::size_t nvars, std::uint64_t q) {
    double bits = static_cast<double>(nvars) * std::log2(static_cast<double>(q) + 1.0);
    if (bits > 62) throw TooLarge("q^(n+1) exceeds 2^62");
    std::vector<std::uint64_t> c{1};
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<std::uint64_t> next(c.size() + q - 1, 0);
        // sliding-window sum: next[i] = sum_{i-q < j <= i} c[j]
        std::uint64_t window = 0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (i < c.size()) window += c[i];
            if (i >= q && i - q < c.size()) window -= c[i - q];
            next[i] = window;
        }
        c = std::move(next);
    }
    return c;
}

/// true iff every monomial of f has some exponent >= q, i.e. f lies in the
/// Frobenius power (x_0^q,..,x_n^q).
inline bool is_in_frobenius_power(const MultiPoly& f, std::uint64_t q) {
    if (!f.is_homogeneous()) throw NotHomogeneous("Frobenius membership of a non-homogeneous form");
    for (const auto& [m, c] : f.terms())
        if (!m.any_exponent_at_least(static_cast<std::uint32_t>(q))) return false;
    return true;
}

namespace detail {

/**
 * Rank of multiplication by f from Theta_{i-d} to Theta_i by Gaussian
 * elimination with a structured pivot order. Columns whose image under the
 * leading monomial of f survives truncation have pairwise distinct leading
 * rows and are independent; only the remaining columns are reduced against
 * them, leaving a small dense block.
 */
inline std::size_t staircase_rank(const MultiPoly& f, std::uint64_t q, std::int64_t i) {
    const PrimeField& F = f.field();
    unsigned n = static_cast<unsigned>(f.num_vars()) - 1;
    std::int64_t d = f.degree();
    std::vector<Monomial> target = slice_basis(n, q, i);
    std::vector<Monomial> source = slice_basis(n, q, i - d);
    if (target.empty() || source.empty()) return 0;

    const std::uint32_t cap = static_cast<std::uint32_t>(q);
    const Monomial& lead = f.terms().begin()->first;
    const std::uint64_t lead_inv = F.inv(f.terms().begin()->second);

    struct Entry {
        std::size_t row;
        std::uint64_t coeff;
    };
    // survivor tails indexed by pivot row; -1 marks a non-pivot row
    std::vector<std::int32_t> pivot_of_row(target.size(), -1);
    std::vector<std::vector<Entry>> tails;
    std::vector<std::vector<Entry>> dead;

    for (const auto& m : source) {
        Monomial top = lead * m;
        bool survives = !top.any_exponent_at_least(cap);
        std::vector<Entry> col;
        for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
            Monomial prod = it->first * m;
            if (prod.any_exponent_at_least(cap)) continue;
            col.push_back({slice_index(target, prod), it->second});
        }
        if (survives) {
            pivot_of_row[slice_index(target, top)] = static_cast<std::int32_t>(tails.size());
            tails.push_back(std::move(col));
        } else if (!col.empty()) {
            dead.push_back(std::move(col));
        }
    }

    std::size_t rank = tails.size();
    if (dead.empty()) return rank;

    std::vector<std::size_t> compress(target.size(), 0);
    std::size_t nonpivot = 0;
    for (std::size_t r = 0; r < target.size(); ++r)
        if (pivot_of_row[r] < 0) compress[r] = nonpivot++;

    RowReducer residual(nonpivot, F);
    std::vector<std::uint64_t> v(target.size());
    std::vector<std::uint64_t> res(nonpivot);
    for (const auto& col : dead) {
        std::fill(v.begin(), v.end(), 0);
        for (const auto& e : col) v[e.row] = F.add(v[e.row], e.coeff);
        for (std::size_t r = 0; r < target.size(); ++r) {
            if (v[r] == 0) continue;
            std::int32_t s = pivot_of_row[r];
            if (s < 0) continue;
            std::uint64_t factor = F.mul(v[r], lead_inv);
            v[r] = 0;
            for (const auto& e : tails[static_cast<std::size_t>(s)])
                v[e.row] = F.sub(v[e.row], F.mul(factor, e.coeff));
        }
        std::fill(res.begin(), res.end(), 0);
        for (std::size_t r = 0; r < target.size(); ++r)
            if (v[r] != 0) res[compress[r]] = v[r];
        auto tmp = res;
        residual.insert(tmp);
    }
    return rank + residual.rank();
}

}  // namespace detail

enum class RankMethod { Staircase, Dense };

struct ProfileOptions {
    RankMethod method = RankMethod::Staircase;
    /// Derive ranks above the middle degree from rank(f|_{j}) = rank(f|_{l+d-j})
    /// (a consequence of the self-duality of the defining exact sequence).
    bool degree_symmetry = true;
};

/// Per-q profile of theta = S/(f + x^{[q]}).
struct HKProfile {
    std::uint64_t q = 1;
    std::vector<std::uint64_t> theta_quotient_dims;  // dim theta_i, i = 0..(n+1)(q-1)
    std::uint64_t hk_value = 0;
    std::int64_t a_q = 0;     // socle degree: max { i : theta_i != 0 }
    std::int64_t iota_q = 0;  // initial degree of the kernel module
    std::int64_t m_q = 0;
    std::uint64_t L_q = 0;
    bool maximal_rank = false;
    std::vector<std::uint64_t> mult_ranks;  // rank of f|Theta_{i-d} -> Theta_i
};

/**
 * Computes dim theta_i = dim Theta_i - rank(f|Theta_{i-d}) for every degree,
 * the total colength, the socle degree a(q), the initial degree iota(q) (via
 * nullities of the same multiplication maps), m(q), L(q), and the
 * maximal-rank predicate 2 a(q) < (n+1)(q-1) + d.
 */
inline HKProfile hk_profile(const MultiPoly& f, std::uint64_t q, ProfileOptions opt = {}) {
    if (q < 1) throw PreconditionViolated("hk_profile requires q >= 1");
    if (f.is_zero()) throw ZeroPolynomial("Hilbert-Kunz profile of the zero polynomial");
    if (!f.is_homogeneous()) throw NotHomogeneous("Hilbert-Kunz profile of a non-homogeneous form");
    if (f.degree() < 1) throw PreconditionViolated("hk_profile requires degree >= 1");
    if (f.num_vars() < 2) throw PreconditionViolated("hk_profile requires at least 2 variables");

    const std::size_t nvars = f.num_vars();
    const unsigned n = static_cast<unsigned>(nvars) - 1;
    const std::int64_t d = f.degree();
    const std::int64_t l = static_cast<std::int64_t>(nvars) * (static_cast<std::int64_t>(q) - 1);

    std::vector<std::uint64_t> alpha = theta_dims_vector(nvars, q);

    HKProfile p;
    p.q = q;
    p.mult_ranks.assign(static_cast<std::size_t>(l + d) + 1, 0);
    std::int64_t jmid = opt.degree_symmetry ? (l + d) / 2 : l;
    for (std::int64_t j = d; j <= std::min(l, jmid); ++j) {
        std::uint64_t r;
        if (opt.method == RankMethod::Staircase)
            r = detail::staircase_rank(f, q, j);
        else
            r = rank(mult_matrix(f, q, j));
        p.mult_ranks[static_cast<std::size_t>(j)] = r;
    }
    if (opt.degree_symmetry)
        for (std::int64_t j = jmid + 1; j <= l; ++j)
            p.mult_ranks[static_cast<std::size_t>(j)] =
                p.mult_ranks[static_cast<std::size_t>(l + d - j)];

    p.theta_quotient_dims.resize(static_cast<std::size_t>(l) + 1);
    for (std::int64_t i = 0; i <= l; ++i) {
        std::uint64_t dim =
            alpha[static_cast<std::size_t>(i)] - p.mult_ranks[static_cast<std::size_t>(i)];
        p.theta_quotient_dims[static_cast<std::size_t>(i)] = dim;
        p.hk_value += dim;
        if (dim > 0) p.a_q = i;
    }
    for (std::int64_t i = 0;; ++i) {
        std::uint64_t r = i + d <= l ? p.mult_ranks[static_cast<std::size_t>(i + d)] : 0;
        if (alpha[static_cast<std::size_t>(i)] > r) {
            p.iota_q = i;
            break;
        }
    }
    p.m_q = static_cast<std::int64_t>(m_of_q(n, static_cast<unsigned>(d), q));
    p.L_q = lower_bound_L(n, static_cast<unsigned>(d), q).convert_to<std::uint64_t>();
    p.maximal_rank = 2 * p.a_q < l + d;
    return p;
}

/**
 * Independent oracle for the colength: spans {x_j^q * m} and {f * m} over all
 * monomials m degree by degree inside the full polynomial ring, row-reduces,
 * and returns the codimension. Guarded to small instances.
 */
inline std::uint64_t brute_force_colength(const MultiPoly& f, std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("brute_force_colength requires q >= 1");
    if (f.is_zero()) throw ZeroPolynomial("colength of the zero polynomial");
    if (!f.is_homogeneous()) throw NotHomogeneous("colength of a non-homogeneous form");
    const std::size_t nvars = f.num_vars();
    double size = 1;
    for (std::size_t v = 0; v < nvars; ++v) size *= static_cast<double>(q);
    if (size > 1e5) throw TooLarge("instance exceeds the brute-force guard q^(n+1) <= 1e5");

    const std::int64_t d = f.degree();
    const std::int64_t l = static_cast<std::int64_t>(nvars) * (static_cast<std::int64_t>(q) - 1);
    const std::uint32_t cap = static_cast<std::uint32_t>(q);
    const PrimeField& F = f.field();

    std::uint64_t total = 0;
    for (std::int64_t D = 0; D <= l; ++D) {
        std::vector<Monomial> sd = enumerate_monomials(nvars, static_cast<std::uint32_t>(D));
        std::vector<std::size_t> compress(sd.size());
        std::size_t free_cols = 0, monomial_pivots = 0;
        for (std::size_t c = 0; c < sd.size(); ++c) {
            if (sd[c].any_exponent_at_least(cap))
                ++monomial_pivots;  // x_j^q * m generator: an immediate pivot
            else
                compress[c] = free_cols++;
        }
        RowReducer red(free_cols, F);
        if (D >= d) {
            std::vector<std::uint64_t> row(free_cols);
            for (const auto& m : enumerate_monomials(nvars, static_cast<std::uint32_t>(D - d))) {
                std::fill(row.begin(), row.end(), 0);
                bool any = false;
                for (const auto& [nu, coeff] : f.terms()) {
                    Monomial prod = nu * m;
                    if (prod.any_exponent_at_least(cap)) continue;
                    std::size_t c = compress[slice_index(sd, prod)];
                    row[c] = F.add(row[c], coeff);
                    any = true;
                }
                if (!any) continue;
                auto tmp = row;
                red.insert(tmp);
            }
        }
        total += free_cols - red.rank();
    }
    return total;
}

}  // namespace hk

#endif
