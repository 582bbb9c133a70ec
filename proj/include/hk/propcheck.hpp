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

#ifndef HK_PROPCHECK_HPP
#define HK_PROPCHECK_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quotient.hpp"

namespace hk {

struct PropertyOptions {
    std::uint64_t seed = 20260809;
    unsigned instances = 54;
    bool with_oracle = true;
    bool with_coordinate_changes = true;
};

struct PropertyFailure {
    std::string property;
    std::string instance;
};

struct PropertyReport {
    unsigned instances = 0;
    unsigned checks = 0;
    std::vector<PropertyFailure> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline MultiPoly random_form(std::mt19937_64& rng, const PrimeField& F, std::size_t nvars,
                             std::uint32_t d) {
    for (;;) {
        MultiPoly f(F, nvars);
        for (const auto& m : enumerate_monomials(nvars, d))
            f.add_term(m, static_cast<std::int64_t>(rng() % F.modulus()));
        if (!f.is_zero()) return f;
    }
}

inline std::vector<std::vector<std::uint64_t>> random_invertible(std::mt19937_64& rng,
                                                                 const PrimeField& F,
                                                                 std::size_t n) {
    for (;;) {
        std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
        FpMatrix m(n, n, F);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = rng() % F.modulus();
                m.at(i, j) = a[i][j];
            }
        if (rank(m) == n) return a;
    }
}

inline bool is_power_of(std::uint64_t q, std::uint64_t p) {
    while (q > 1 && q % p == 0) q /= p;
    return q == 1;
}

}  // namespace detail

/**
 * Randomized checks of the structural facts the engine relies on: the
 * duality a(q) + iota(q) = (n+1)(q-1) and its per-degree form, the three-way
 * equivalence behind the maximal-rank predicate, reciprocality/unimodality of
 * the ambient slice dimensions, agreement with the brute-force colength, and
 * invariance under coordinate changes when q is a power of p.
 */
inline PropertyReport run_property_suite(const PropertyOptions& opt = {}) {
    const std::vector<std::uint64_t> ps = {3, 5};
    const std::vector<unsigned> ns = {2, 3};
    const std::vector<std::uint32_t> ds = {2, 3, 4};
    const std::vector<std::uint64_t> qs = {3, 5, 9};

    std::mt19937_64 rng(opt.seed);
    PropertyReport rep;

    auto expect = [&](bool cond, const char* property, const std::string& inst) {
        ++rep.checks;
        if (!cond) rep.failures.push_back({property, inst});
    };

    std::size_t combo = 0;
    const std::size_t ncombos = ps.size() * ns.size() * ds.size() * qs.size();
    while (rep.instances < opt.instances) {
        std::size_t c = combo++ % ncombos;
        std::uint64_t p = ps[c % ps.size()];
        unsigned n = ns[(c / ps.size()) % ns.size()];
        std::uint32_t d = ds[(c / (ps.size() * ns.size())) % ds.size()];
        std::uint64_t q = qs[(c / (ps.size() * ns.size() * ds.size())) % qs.size()];

        PrimeField F(p);
        const std::size_t nvars = n + 1;
        MultiPoly f = detail::random_form(rng, F, nvars, d);
        std::string inst = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                           " d=" + std::to_string(d) + " q=" + std::to_string(q) + " f=" +
                           f.str({"x0", "x1", "x2", "x3"});
        ++rep.instances;

        const std::int64_t l =
            static_cast<std::int64_t>(nvars) * (static_cast<std::int64_t>(q) - 1);
        ProfileOptions no_sym{RankMethod::Staircase, false};
        HKProfile prof = hk_profile(f, q, no_sym);

        // ambient slice dimensions vs the series module, reciprocality,
        // unimodality
        std::vector<std::uint64_t> alpha = theta_dims_vector(nvars, q);
        bool alpha_ok = true, recip = true, unimodal = true;
        for (std::int64_t i = 0; i <= l; ++i) {
            if (BigInt(alpha[static_cast<std::size_t>(i)]) != theta_dim(n, q, i))
                alpha_ok = false;
            if (alpha[static_cast<std::size_t>(i)] != alpha[static_cast<std::size_t>(l - i)])
                recip = false;
        }
        for (std::int64_t i = 0; i + 1 <= l / 2; ++i)
            if (alpha[static_cast<std::size_t>(i)] >= alpha[static_cast<std::size_t>(i + 1)])
                unimodal = false;
        expect(alpha_ok, "slice dims match series", inst);
        expect(recip, "reciprocality", inst);
        expect(unimodal, "unimodality", inst);

        // duality and per-degree duality
        expect(prof.a_q + prof.iota_q == l, "a(q) + iota(q) = (n+1)(q-1)", inst);
        bool perdeg = true;
        for (std::int64_t i = 0; i <= l; ++i) {
            std::int64_t j = l - i + d;
            std::uint64_t r =
                j >= 0 && j <= l ? prof.mult_ranks[static_cast<std::size_t>(j)] : 0;
            if (prof.theta_quotient_dims[static_cast<std::size_t>(i)] !=
                alpha[static_cast<std::size_t>(l - i)] - r)
                perdeg = false;
        }
        expect(perdeg, "dim theta_i = nullity(f|Theta_{l-i})", inst);

        // three-way equivalence of the minimality conditions
        bool via_L = prof.hk_value == prof.L_q;
        bool via_a = prof.a_q == prof.m_q;
        bool via_iota = prof.iota_q == l - prof.m_q;
        expect(via_L == via_a && via_a == via_iota, "three-way minimality equivalence", inst);
        expect(prof.maximal_rank == via_a, "maximal-rank flag", inst);
        expect(prof.a_q >= prof.m_q, "a(q) >= m(q)", inst);
        expect(prof.hk_value >= prof.L_q, "hk >= L", inst);

        // top value iff membership in the Frobenius power
        std::uint64_t qn1 = 1;
        for (std::size_t v = 0; v < nvars; ++v) qn1 *= q;
        expect((prof.hk_value == qn1) == is_in_frobenius_power(f, q),
               "hk = q^(n+1) iff f in x^[q]", inst);

        // the symmetric fast path computes the same profile
        HKProfile sym = hk_profile(f, q);
        expect(sym.mult_ranks == prof.mult_ranks && sym.hk_value == prof.hk_value,
               "degree symmetry", inst);

        // dense Gaussian elimination agrees on small instances
        if (q <= 5) {
            HKProfile dense = hk_profile(f, q, ProfileOptions{RankMethod::Dense, false});
            expect(dense.mult_ranks == prof.mult_ranks, "staircase vs dense ranks", inst);
        }

        if (opt.with_oracle)
            expect(brute_force_colength(f, q) == prof.hk_value, "brute-force colength", inst);

        if (opt.with_coordinate_changes && detail::is_power_of(q, p))
            for (int rep_i = 0; rep_i < 5; ++rep_i) {
                auto a = detail::random_invertible(rng, F, nvars);
                HKProfile moved = hk_profile(f.substitute_linear(a), q);
                expect(moved.hk_value == prof.hk_value,
                       "coordinate invariance at Frobenius powers", inst);
            }
    }
    return rep;
}

}  // namespace hk

#endif
