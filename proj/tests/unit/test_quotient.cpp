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

#include "hk/parse.hpp"
#include "hk/quotient.hpp"

using namespace hk;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> XYZW = {"x", "y", "z", "w"};
}  // namespace

TEST_CASE("slice bases") {
    auto socle = slice_basis(2, 2, 3);
    REQUIRE(socle.size() == 1);
    CHECK(socle[0] == Monomial({1, 1, 1}));

    auto lin = slice_basis(2, 2, 1);
    REQUIRE(lin.size() == 3);
    CHECK(lin[0] == Monomial({1, 0, 0}));
    CHECK(lin[1] == Monomial({0, 1, 0}));
    CHECK(lin[2] == Monomial({0, 0, 1}));

    CHECK(slice_basis(2, 5, 6).size() == 19);  // theta_dim(2, 5, 6)
    CHECK(slice_basis(2, 5, 6).size() ==
          theta_dim(2, 5, 6).convert_to<std::size_t>());
    CHECK(slice_basis(2, 5, -1).empty());
    CHECK(slice_basis(2, 5, 13).empty());
}

TEST_CASE("slice bases are strictly decreasing in grlex") {
    for (std::int64_t i : {0, 1, 2, 5, 8}) {
        auto basis = slice_basis(3, 4, i);
        CHECK(basis.size() == theta_dim(3, 4, i).convert_to<std::size_t>());
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            CHECK(MonomialGrlexGreater{}(basis[k], basis[k + 1]));
    }
}

TEST_CASE("multiplication matrices") {
    PrimeField f2(2), f5(5);

    auto cube = parse_poly("x^3", XYZ, f5);
    // q too small: x^3 truncates to zero although the slice is 1-dimensional
    {
        PrimeField f(2);
        auto m = mult_matrix(parse_poly("x^3", XYZ, f), 2, 3);
        REQUIRE(m.rows() == 1);
        REQUIRE(m.cols() == 1);
        CHECK(m.at(0, 0) == 0);
        CHECK(rank(m) == 0);
    }
    {
        auto m = mult_matrix(parse_poly("x*y*z", XYZ, f2), 2, 3);
        REQUIRE(m.rows() == 1);
        REQUIRE(m.cols() == 1);
        CHECK(rank(m) == 1);
    }
    {
        auto m = mult_matrix(parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5), 5, 3);
        CHECK(m.cols() == 1);
        CHECK(rank(m) == 1);
    }

    auto inhom = parse_poly("x^2 + y", XYZ, f5);
    CHECK_THROWS_AS(mult_matrix(inhom, 3, 2), NotHomogeneous);
}

TEST_CASE("dense rank") {
    PrimeField f5(5);
    FpMatrix zero(3, 3, f5);
    CHECK(rank(zero) == 0);

    FpMatrix id(4, 4, f5);
    for (int i = 0; i < 4; ++i) id.set(i, i, 1);
    CHECK(rank(id) == 4);

    FpMatrix m(2, 2, f5);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    CHECK(rank(m) == 1);
}

TEST_CASE("profile of an elliptic curve at q = 5") {
    PrimeField f5(5);
    auto f = parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5);
    HKProfile p = hk_profile(f, 5);
    CHECK(p.hk_value == 55);
    CHECK(p.a_q == 7);
    CHECK(p.iota_q == 5);
    CHECK(p.m_q == 7);
    CHECK(p.L_q == 55);
    CHECK(p.maximal_rank);
}

TEST_CASE("profile of a cuspidal cubic at q = 5") {
    PrimeField f5(5);
    HKProfile p = hk_profile(parse_poly("z*y^2 - x^3", XYZ, f5), 5);
    CHECK(p.hk_value == 57);
    CHECK_FALSE(p.maximal_rank);
}

TEST_CASE("profile at q = 1") {
    PrimeField f3(3);
    HKProfile p = hk_profile(parse_poly("x^3", XYZ, f3), 1);
    CHECK(p.hk_value == 1);
    CHECK(p.a_q == 0);
}

TEST_CASE("profile of the Cayley cubic at q = 4 over F_3") {
    PrimeField f3(3);
    auto f = parse_poly("x*y*z + x*y*w + x*z*w + y*z*w", XYZW, f3);
    HKProfile p = hk_profile(f, 4);
    CHECK(p.hk_value == 124);
    CHECK(p.a_q == 7);
}

TEST_CASE("staircase and dense ranks agree") {
    PrimeField f5(5), f3(3);
    std::vector<MultiPoly> polys = {
        parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5),
        parse_poly("z*y^2 - x^3", XYZ, f5),
        parse_poly("x^2 - y*z", XYZ, f3),
        parse_poly("x*y*z + x*y*w + x*z*w + y*z*w", XYZW, f3),
        parse_poly("x^2*y + 2*y^3 + x*y*z + 4*z^3", XYZ, f5),
    };
    for (const auto& f : polys)
        for (std::uint64_t q : {2, 3, 4, 5}) {
            ProfileOptions fast{RankMethod::Staircase, false};
            ProfileOptions dense{RankMethod::Dense, false};
            HKProfile a = hk_profile(f, q, fast);
            HKProfile b = hk_profile(f, q, dense);
            CHECK(a.mult_ranks == b.mult_ranks);
            CHECK(a.hk_value == b.hk_value);
            HKProfile c = hk_profile(f, q);  // default: symmetry on
            CHECK(c.mult_ranks == a.mult_ranks);
        }
}

TEST_CASE("Frobenius power membership") {
    PrimeField f5(5);
    CHECK(is_in_frobenius_power(parse_poly("x^3", XYZ, f5), 2));
    CHECK_FALSE(is_in_frobenius_power(parse_poly("x*y*z", XYZ, f5), 2));
    CHECK(is_in_frobenius_power(parse_poly("x^2*y^2 + y^4", XYZ, f5), 2));
}

TEST_CASE("membership in the Frobenius power is equivalent to the maximal value") {
    PrimeField f3(3);
    for (const char* s : {"x^3", "x*y*z", "x^2*y^2 + y^4", "x^4 + y^4 + z^4", "x^2*y^2 + z^4"})
        for (std::uint64_t q : {2, 3}) {
            auto f = parse_poly(s, XYZ, f3);
            std::uint64_t qn1 = q * q * q;
            CHECK((hk_profile(f, q).hk_value == qn1) == is_in_frobenius_power(f, q));
        }
}

TEST_CASE("brute-force oracle on fixed instances") {
    PrimeField f3(3);
    auto cube = parse_poly("x^3", XYZ, f3);
    CHECK(brute_force_colength(cube, 3) == hk_profile(cube, 3).hk_value);
    CHECK(brute_force_colength(parse_poly("y^2*z - x^3", XYZ, f3), 3) == 21);
    CHECK(brute_force_colength(parse_poly("x^2 - y*z", XYZ, f3), 3) == 13);
}

TEST_CASE("brute-force guard") {
    PrimeField f3(3);
    CHECK_THROWS_AS(brute_force_colength(parse_poly("x^3", XYZ, f3), 101), TooLarge);
}

TEST_CASE("degenerate inputs") {
    PrimeField f5(5);
    // degree above the socle degree of Theta: f acts as zero
    auto f = parse_poly("x^7", XYZ, f5);
    HKProfile p = hk_profile(f, 2);
    CHECK(p.hk_value == 8);
    CHECK(p.maximal_rank);
    CHECK(p.a_q == 3);

    MultiPoly zero(f5, 3);
    CHECK_THROWS_AS(hk_profile(zero, 3), ZeroPolynomial);
    CHECK_THROWS_AS(hk_profile(parse_poly("x + y", XYZ, f5) + parse_poly("x^2", XYZ, f5), 3),
                    NotHomogeneous);
}

TEST_CASE("linear forms and binary forms") {
    PrimeField f3(3);
    // S/(x) = k[y,z]: the quotient by (x, x^q, y^q, z^q) has dimension q^2;
    // multiplication by x kills the top x-exponent, so the rank is not maximal
    HKProfile lin = hk_profile(parse_poly("x", XYZ, f3), 3);
    CHECK(lin.hk_value == 9);
    CHECK_FALSE(lin.maximal_rank);
    CHECK(lin.hk_value == brute_force_colength(parse_poly("x", XYZ, f3), 3));
    // mixed linear form
    HKProfile mixed = hk_profile(parse_poly("x + 2*y + z", XYZ, f3), 3);
    CHECK(mixed.hk_value == 9);

    // two variables: f = xy at q = 3 leaves {1, x, x^2, y, y^2}
    auto bin = parse_poly("x*y", {"x", "y"}, f3);
    HKProfile b = hk_profile(bin, 3);
    CHECK(b.hk_value == 5);
    CHECK(b.hk_value == brute_force_colength(bin, 3));
    CHECK(b.maximal_rank);
}

TEST_CASE("single-monomial and non-monic leading forms") {
    PrimeField f5(5);
    for (const char* s : {"x^3", "2*x^3", "x*y^2", "3*z^3", "2*x^2*y^2"})
        for (std::uint64_t q : {2, 3, 4, 5, 7}) {
            auto f = parse_poly(s, XYZ, f5);
            HKProfile fast = hk_profile(f, q, ProfileOptions{RankMethod::Staircase, false});
            HKProfile dense = hk_profile(f, q, ProfileOptions{RankMethod::Dense, false});
            CHECK(fast.mult_ranks == dense.mult_ranks);
            CHECK(fast.hk_value == brute_force_colength(f, q));
        }
}

TEST_CASE("matrices outside the graded range are empty") {
    PrimeField f5(5);
    auto f = parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5);
    CHECK(mult_matrix(f, 3, -1).rows() == 0);
    CHECK(mult_matrix(f, 3, 2).cols() == 0);   // source degree -1
    CHECK(mult_matrix(f, 3, 13).rows() == 0);  // past the socle degree 12
    CHECK(rank(mult_matrix(f, 3, 2)) == 0);
}

TEST_CASE("duality and per-degree duality on fixed instances") {
    PrimeField f5(5);
    auto f = parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5);
    for (std::uint64_t q : {2, 3, 5}) {
        ProfileOptions full{RankMethod::Dense, false};
        HKProfile p = hk_profile(f, q, full);
        std::int64_t l = 3 * (static_cast<std::int64_t>(q) - 1);
        CHECK(p.a_q + p.iota_q == l);
        for (std::int64_t i = 0; i <= l; ++i) {
            // dim theta_i = nullity of f|Theta_{l-i}
            std::uint64_t src = theta_dim(2, q, l - i).convert_to<std::uint64_t>();
            std::uint64_t r = (l - i + 3 <= l) ? p.mult_ranks[static_cast<std::size_t>(l - i + 3)]
                                               : 0;
            CHECK(p.theta_quotient_dims[static_cast<std::size_t>(i)] == src - r);
        }
    }
}
