/*
   Copyright 2026 The ufspec Authors

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

#ifndef UFSPEC_ERRORS_HPP
#define UFSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ufspec {

/// Base class for all errors raised by the library.
///
/// InputError covers malformed or inconsistent inputs (exit code 2 in the
/// CLI); CheckError covers verification failures discovered while computing
/// (exit code 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class CheckError : public Error {
public:
    using Error::Error;
};

struct NotAUnit : InputError { using InputError::InputError; };
struct ShapeMismatch : InputError { using InputError::InputError; };
struct ParentMismatch : InputError { using InputError::InputError; };
struct UnknownGenerator : InputError { using InputError::InputError; };
struct UnknownIdentifier : InputError { using InputError::InputError; };
struct GroundSetMismatch : InputError { using InputError::InputError; };
struct NotMaximal : InputError { using InputError::InputError; };
struct NotUnitValued : InputError { using InputError::InputError; };
struct NotOverP : InputError { using InputError::InputError; };
struct TooLarge : InputError { using InputError::InputError; };

/// Syntax error in the expression grammar; `position` is a 0-based offset
/// into the input text.
class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : InputError("syntax error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

struct FIPViolated : CheckError {
    FIPViolated(const std::string& what, std::vector<std::size_t> tuple)
        : CheckError(what), violating_members(std::move(tuple)) {}
    /// Indices into the input family whose intersection is empty.
    std::vector<std::size_t> violating_members;
};

struct NotDivisible : CheckError {
    NotDivisible(const std::string& what, long long witness)
        : CheckError(what), witness_argument(witness) {}
    long long witness_argument;
};

struct PreconditionFailed : CheckError {
    PreconditionFailed(const std::string& what, long long witness)
        : CheckError(what), witness_argument(witness) {}
    long long witness_argument;
};

struct CheckFailed : CheckError { using CheckError::CheckError; };

}  // namespace ufspec

#endif
