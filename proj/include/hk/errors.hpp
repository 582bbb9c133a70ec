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

#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct CharacteristicMismatch : Error {
    using Error::Error;
};

struct IntegralityError : Error {
    using Error::Error;
};

struct EvenModulus : Error {
    using Error::Error;
};

struct BadCharacteristic : Error {
    using Error::Error;
};

struct BadCongruence : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct CuspidalInput : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace hk

#endif
