/*
   Copyright 2026 The quartic-torsion Authors.

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

#ifndef QTORS_ERROR_HPP
#define QTORS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qtors {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, field or curve specs, data files).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
   public:
    using Error::Error;
};

class SingularCurveError : public DomainError {
   public:
    using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
   public:
    using DomainError::DomainError;
};

/// The field is outside what the torsion engine supports (e.g. non-Galois quartic).
class UnsupportedField : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A structural invariant failed during a computation. Always a bug; never recovered from.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

class Timeout : public Error {
   public:
    using Error::Error;
};

}  // namespace qtors

#endif  // QTORS_ERROR_HPP
