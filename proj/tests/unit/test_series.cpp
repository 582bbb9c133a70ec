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

#include <catch2/catch_amalgamated.hpp>

#include "hk/series.hpp"

using namespace hk;

namespace {

// Oracle: coefficients of (1 + t + ... + t^{q-1})^{n+1} by naive convolution.
std::vector<BigInt> expand_theta_series(unsigned n, std::uint64_t q) {
    std::vector<BigInt> c{1};
    for (unsigned v = 0; v <= n; ++v) {
        std::vector<BigInt> next(c.size() + q - 1, BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::uint64_t j = 0; j < q; ++j) next[i + j] += c[i];
        c = std::move(next);
    }
    return c;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(50, 25) == BigInt("126410606437752"));
}

TEST_CASE("theta_dim examples") {
    CHECK(theta_dim(2, 2, 1) == 3);  // (1+t)^3
    CHECK(theta_dim(2, 3, 3) == 7);
    CHECK(theta_dim(2, 5, -1) == 0);
    CHECK(theta_dim(2, 5, 13) == 0);  // beyond the socle degree 12
}

TEST_CASE("theta_dim equals the expanded series") {
    for (unsigned n : {1u, 2u, 3u})
        for (std::uint64_t q : {1, 2, 3, 5, 8, 9}) {
            auto oracle = expand_theta_series(n, q);
            std::int64_t l = static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(q) - 1);
            REQUIRE(oracle.size() == static_cast<std::size_t>(l + 1));
            for (std::int64_t i = -2; i <= l + 2; ++i) {
                BigInt expect = (i < 0 || i > l) ? BigInt(0) : oracle[static_cast<std::size_t>(i)];
                CHECK(theta_dim(n, q, i) == expect);
            }
        }
}

TEST_CASE("theta_dim reciprocality, unimodality and total mass") {
    for (unsigned n : {1u, 2u, 3u})
        for (std::uint64_t q : {2, 3, 4, 5, 9, 16}) {
            std::int64_t l = static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(q) - 1);
            BigInt sum = 0, qn1 = 1;
            for (unsigned v = 0; v <= n; ++v) qn1 *= q;
            for (std::int64_t i = 0; i <= l; ++i) {
                sum += theta_dim(n, q, i);
                CHECK(theta_dim(n, q, i) == theta_dim(n, q, l - i));
            }
            CHECK(sum == qn1);
            for (std::int64_t i = 0; i + 1 <= l / 2; ++i)
                CHECK(theta_dim(n, q, i) < theta_dim(n, q, i + 1));
        }
}

TEST_CASE("m_of_q") {
    CHECK(m_of_q(2, 3, 5) == 7);
    CHECK(m_of_q(3, 3, 4) == 7);
    CHECK(m_of_q(2, 2, 2) == 2);
    CHECK_THROWS_AS(m_of_q(0, 3, 5), PreconditionViolated);
}

TEST_CASE("lower bound examples") {
    CHECK(lower_bound_L(2, 3, 5) == 55);
    CHECK(lower_bound_L(2, 3, 4) == 34);
    CHECK(lower_bound_L(3, 2, 3) == 35);
}

TEST_CASE("lower bound equals the window sum") {
    for (unsigned n : {1u, 2u, 3u})
        for (unsigned d : {1u, 2u, 3u, 4u, 7u})
            for (std::uint64_t q : {1, 2, 3, 4, 5, 9, 25}) {
                BigInt window = 0;
                std::int64_t m = static_cast<std::int64_t>(m_of_q(n, d, q));
                for (std::int64_t i = m - static_cast<std::int64_t>(d) + 1; i <= m; ++i)
                    window += theta_dim(n, q, i);
                CHECK(lower_bound_L(n, d, q) == window);
            }
}

TEST_CASE("lower bound closed forms for d in {2,3}, n in {2,3}") {
    for (std::uint64_t q = 1; q <= 50; ++q) {
        // d=2, n=2: floor(3 q^2 / 2)
        CHECK(lower_bound_L(2, 2, q) == BigInt(3 * q * q / 2));
        CHECK(m_of_q(2, 2, q) == (3 * q) / 2 - 1);
        // d=2, n=3: (4 q^3 - q) / 3
        CHECK((4 * q * q * q - q) % 3 == 0);
        CHECK(lower_bound_L(3, 2, q) == BigInt((4 * q * q * q - q) / 3));
        CHECK(m_of_q(3, 2, q) == 2 * (q - 1));
        // d=3, n=2: (9 q^2 - 5)/4 for odd q, (9 q^2 - 8)/4 for even q
        if (q % 2 == 1) {
            CHECK((9 * q * q - 5) % 4 == 0);
            CHECK(lower_bound_L(2, 3, q) == BigInt((9 * q * q - 5) / 4));
        } else {
            CHECK((9 * q * q - 8) % 4 == 0);
            CHECK(lower_bound_L(2, 3, q) == BigInt((9 * q * q - 8) / 4));
        }
        CHECK(m_of_q(2, 3, q) == (3 * q - 1) / 2);
        // d=3, n=3: 2 q^3 - q
        CHECK(lower_bound_L(3, 3, q) == BigInt(2 * q * q * q - q));
        CHECK(m_of_q(3, 3, q) == 2 * q - 1);
    }
}

TEST_CASE("beta constants") {
    CHECK(beta(1) == Rational(1));
    CHECK(beta(2) == Rational(1));
    CHECK(beta(3) == Rational(3, 4));
    CHECK(beta(4) == Rational(2, 3));
    CHECK(beta(5) == Rational(115, 192));
    CHECK(beta(6) == Rational(11, 20));
    for (unsigned i = 2; i <= 12; ++i) CHECK(beta(i + 1) < beta(i));
}

TEST_CASE("beta limit gap") {
    CHECK(beta_limit_gap(2, 3, 5) == Rational(1, 20));
    CHECK(beta_limit_gap(2, 3, 1001) < Rational(1, 100));
    CHECK_THROWS_AS(beta_limit_gap(1, 1, 7), PreconditionViolated);
}

TEST_CASE("beta limit gap decays like 1/q") {
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {2, 2}, {3, 2}})
        for (std::uint64_t q : {10, 11, 100, 101, 500, 999, 1000}) {
            Rational scaled = beta_limit_gap(n, d, q) * Rational(static_cast<long>(q));
            CHECK(scaled <= Rational(10));
        }
}
