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

#ifndef HK_CLOSEDFORM_HPP
#define HK_CLOSEDFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parse.hpp"
#include "quotient.hpp"

namespace hk {

/// The cubic families with known closed-form Hilbert-Kunz functions.
enum class CubicFamily {
    Cuspidal,
    Nodal,
    EllipticOdd,
    EllipticChar2J0,
    EllipticChar2Jnz,
    Cayley,
};

inline const char* family_name(CubicFamily f) {
    switch (f) {
        case CubicFamily::Cuspidal: return "cuspidal";
        case CubicFamily::Nodal: return "nodal";
        case CubicFamily::EllipticOdd: return "elliptic_odd";
        case CubicFamily::EllipticChar2J0: return "elliptic_char2_j0";
        case CubicFamily::EllipticChar2Jnz: return "elliptic_char2_jnz";
        case CubicFamily::Cayley: return "cayley";
    }
    return "?";
}

inline CubicFamily family_from_name(const std::string& s) {
    for (CubicFamily f : {CubicFamily::Cuspidal, CubicFamily::Nodal, CubicFamily::EllipticOdd,
                          CubicFamily::EllipticChar2J0, CubicFamily::EllipticChar2Jnz,
                          CubicFamily::Cayley})
        if (s == family_name(f)) return f;
    throw PreconditionViolated("unknown family '" + s + "'");
}

namespace detail {
/// n/d after asserting exact divisibility; the closed forms are integers
/// exactly on their stated congruence classes.
inline std::uint64_t exact_div_u64(std::uint64_t n, std::uint64_t d, const char* what) {
    if (n % d != 0)
        throw IntegralityError(std::string(what) + " is not an integer at this argument");
    return n / d;
}
}  // namespace detail

/**
 * The closed-form (generalized) Hilbert-Kunz value of a family at q:
 *
 *   cuspidal            7/3 q^2            (q = 0 mod 3)
 *                       7/3 q^2 - 4/3      (otherwise)
 *   nodal               7/3 q^2 - 1/3 q - 1    (q != 2 mod 3)
 *                       7/3 q^2 - 1/3 q - 5/3  (q = 2 mod 3)
 *   elliptic, p odd     9/4 q^2 - 5/4
 *   elliptic, p = 2     9/4 q^2            (j = 0)
 *                       9/4 q^2 - 1        (j != 0)
 *   Cayley surface      2 q^3 - q
 */
inline std::uint64_t hk_formula(CubicFamily family, std::uint64_t p, std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("hk_formula requires q >= 1");
    PrimeField check(p);  // validates primality
    switch (family) {
        case CubicFamily::Cuspidal:
            return q % 3 == 0 ? detail::exact_div_u64(7 * q * q, 3, "7/3 q^2")
                              : detail::exact_div_u64(7 * q * q - 4, 3, "7/3 q^2 - 4/3");
        case CubicFamily::Nodal:
            return q % 3 == 2
                       ? detail::exact_div_u64(7 * q * q - q - 5, 3, "7/3 q^2 - 1/3 q - 5/3")
                       : detail::exact_div_u64(7 * q * q - q - 3, 3, "7/3 q^2 - 1/3 q - 1");
        case CubicFamily::EllipticOdd:
            if (p == 2) throw CharacteristicMismatch("elliptic_odd requires odd characteristic");
            return detail::exact_div_u64(9 * q * q - 5, 4, "9/4 q^2 - 5/4");
        case CubicFamily::EllipticChar2J0:
            if (p != 2) throw CharacteristicMismatch("elliptic_char2_j0 requires p = 2");
            return detail::exact_div_u64(9 * q * q, 4, "9/4 q^2");
        case CubicFamily::EllipticChar2Jnz:
            if (p != 2) throw CharacteristicMismatch("elliptic_char2_jnz requires p = 2");
            return detail::exact_div_u64(9 * q * q - 4, 4, "9/4 q^2 - 1");
        case CubicFamily::Cayley:
            return 2 * q * q * q - q;
    }
    throw PreconditionViolated("unknown family");
}

/// Socle degree of the Cayley cubic quotient: 0 at q = 1, else 2q - 1.
inline std::uint64_t cayley_socle(std::uint64_t q) {
    if (q < 1) throw PreconditionViolated("cayley_socle requires q >= 1");
    return q == 1 ? 0 : 2 * q - 1;
}

/**
 * Reference equation of each family: the smallest standard representative in
 * the coordinates the closed form refers to.
 *
 *   cuspidal            z y^2 - x^3
 *   nodal (p odd)       z(y^2 - x^2) - x^3
 *   nodal (p = 2)       z(y^2 + x y) - x^3
 *   elliptic, p odd     y^2 z - x^3 - x z^2       (y^2 = x^3 + x)
 *   elliptic p=2, j=0   y^2 z + y z^2 - x^3       (supersingular)
 *   elliptic p=2, j!=0  y^2 z + x y z - x^3 - z^3 (ordinary)
 *   Cayley              x y z + x y w + x z w + y z w
 */
inline MultiPoly reference_polynomial(CubicFamily family, const PrimeField& f) {
    const std::vector<std::string> xyz = {"x", "y", "z"};
    const std::vector<std::string> xyzw = {"x", "y", "z", "w"};
    switch (family) {
        case CubicFamily::Cuspidal:
            return parse_poly("z*y^2 - x^3", xyz, f);
        case CubicFamily::Nodal:
            return f.modulus() == 2 ? parse_poly("z*y^2 + z*x*y - x^3", xyz, f)
                                    : parse_poly("z*y^2 - z*x^2 - x^3", xyz, f);
        case CubicFamily::EllipticOdd:
            if (f.modulus() == 2)
                throw CharacteristicMismatch("elliptic_odd requires odd characteristic");
            return parse_poly("y^2*z - x^3 - x*z^2", xyz, f);
        case CubicFamily::EllipticChar2J0:
            if (f.modulus() != 2) throw CharacteristicMismatch("elliptic_char2_j0 requires p = 2");
            return parse_poly("y^2*z + y*z^2 - x^3", xyz, f);
        case CubicFamily::EllipticChar2Jnz:
            if (f.modulus() != 2) throw CharacteristicMismatch("elliptic_char2_jnz requires p = 2");
            return parse_poly("y^2*z + x*y*z - x^3 - z^3", xyz, f);
        case CubicFamily::Cayley:
            return parse_poly("x*y*z + x*y*w + x*z*w + y*z*w", xyzw, f);
    }
    throw PreconditionViolated("unknown family");
}

/// true for families whose closed form covers arbitrary q (generalized
/// Hilbert-Kunz, in the reference coordinates); the others need q a power of p.
inline bool family_is_generalized(CubicFamily family) {
    return family == CubicFamily::Cuspidal || family == CubicFamily::Cayley;
}

struct FamilyReportRow {
    std::uint64_t q;
    std::uint64_t engine;
    std::uint64_t formula;
    bool match;
    HKProfile profile;
};

struct FamilyReport {
    CubicFamily family;
    std::uint64_t p = 0;
    std::vector<FamilyReportRow> rows;
    bool all_match = true;
};

/// Runs the quotient engine on the family's reference polynomial and compares
/// against hk_formula entry by entry.
inline FamilyReport verify_family(CubicFamily family, std::uint64_t p,
                                  const std::vector<std::uint64_t>& q_list) {
    if (q_list.empty()) throw PreconditionViolated("verify_family requires a nonempty q list");
    PrimeField f(p);
    if (!family_is_generalized(family))
        for (std::uint64_t q : q_list) {
            std::uint64_t r = q;
            while (r > 1 && r % p == 0) r /= p;
            if (r != 1)
                throw PreconditionViolated("q = " + std::to_string(q) +
                                           " is not a power of p for family " +
                                           family_name(family));
        }
    MultiPoly poly = reference_polynomial(family, f);
    FamilyReport rep;
    rep.family = family;
    rep.p = p;
    for (std::uint64_t q : q_list) {
        FamilyReportRow row;
        row.q = q;
        row.profile = hk_profile(poly, q);
        row.engine = row.profile.hk_value;
        row.formula = hk_formula(family, p, q);
        row.match = row.engine == row.formula;
        rep.all_match = rep.all_match && row.match;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hk

#endif
