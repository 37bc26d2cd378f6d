// Copyright 2026 The snarkpipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snarkpipe {

enum class Errc {
  kDivisionByZero,
  kDuplicateNode,
  kPairingUnsupported,
  kSyntaxError,
  kUnknownIdentifier,
  kForwardReference,
  kInvalidExponent,
  kRedefinition,
  kMissingInput,
  kUnexpectedInput,
  kIncompleteAssignment,
  kFieldTooSmall,
  kInvalidWitness,
  kMalformedKey,
  kBackendMismatch,
  kEmptyQap,
  kRoundConsumed,
  kInvalidSolution,
  kInvalidProblem,
  kInvalidArgument,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kDuplicateNode: return "DuplicateNode";
    case Errc::kPairingUnsupported: return "PairingUnsupported";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kUnknownIdentifier: return "UnknownIdentifier";
    case Errc::kForwardReference: return "ForwardReference";
    case Errc::kInvalidExponent: return "InvalidExponent";
    case Errc::kRedefinition: return "Redefinition";
    case Errc::kMissingInput: return "MissingInput";
    case Errc::kUnexpectedInput: return "UnexpectedInput";
    case Errc::kIncompleteAssignment: return "IncompleteAssignment";
    case Errc::kFieldTooSmall: return "FieldTooSmall";
    case Errc::kInvalidWitness: return "InvalidWitness";
    case Errc::kMalformedKey: return "MalformedKey";
    case Errc::kBackendMismatch: return "BackendMismatch";
    case Errc::kEmptyQap: return "EmptyQap";
    case Errc::kRoundConsumed: return "RoundConsumed";
    case Errc::kInvalidSolution: return "InvalidSolution";
    case Errc::kInvalidProblem: return "InvalidProblem";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Diagnostic tied to a position in DSL source. Lines and columns are 1-based.
class SourceError : public Error {
 public:
  SourceError(Errc code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace snarkpipe
