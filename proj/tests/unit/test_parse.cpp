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

using namespace hk;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};
}

TEST_CASE("terms, signs and coefficient reduction") {
    PrimeField f5(5);
    MultiPoly f = parse_poly("y^2*z - x^3 - x*z^2", XYZ, f5);
    CHECK(f.terms().size() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 3);
    CHECK(f.str(XYZ) == "4*x^3 + 4*x*z^2 + 1*y^2*z");

    CHECK(parse_poly("7*x", XYZ, f5).str(XYZ) == "2*x");
    CHECK(parse_poly("2*x*3", XYZ, f5).str(XYZ) == "1*x");
    CHECK(parse_poly("x*x*y^0", XYZ, f5).str(XYZ) == "1*x^2");
    CHECK(parse_poly("5*x + y", XYZ, f5).str(XYZ) == "1*y");  // 5 = 0 mod 5
    CHECK(parse_poly("x - x + z", XYZ, f5).str(XYZ) == "1*z");
    CHECK(parse_poly("- x + 2*x", XYZ, f5).str(XYZ) == "1*x");
    CHECK(parse_poly("10", XYZ, f5).is_zero());
}

TEST_CASE("whitespace is irrelevant") {
    PrimeField f7(7);
    CHECK(parse_poly("  y^2 * z-x^3 ", XYZ, f7).str(XYZ) ==
          parse_poly("y^2*z - x^3", XYZ, f7).str(XYZ));
}

TEST_CASE("parse errors") {
    PrimeField f5(5);
    CHECK_THROWS_AS(parse_poly("x^", XYZ, f5), ParseError);
    CHECK_THROWS_AS(parse_poly("", XYZ, f5), ParseError);
    CHECK_THROWS_AS(parse_poly("x + ", XYZ, f5), ParseError);
    CHECK_THROWS_AS(parse_poly("x y", XYZ, f5), ParseError);  // '*' is required
    CHECK_THROWS_AS(parse_poly("w^2", XYZ, f5), ParseError);  // unknown variable
    CHECK_THROWS_AS(parse_poly("x ^ y", XYZ, f5), ParseError);
    CHECK_THROWS_AS(parse_poly("x московской", XYZ, f5), ParseError);
}

TEST_CASE("round trip through the canonical form") {
    PrimeField f11(11);
    for (const char* s : {"x^3 + 2*y^3 + 3*z^3", "10*x*y*z", "x^2*y - y^2*z + z^2*x"}) {
        MultiPoly f = parse_poly(s, XYZ, f11);
        MultiPoly g = parse_poly(f.str(XYZ), XYZ, f11);
        CHECK(f.str(XYZ) == g.str(XYZ));
    }
}
