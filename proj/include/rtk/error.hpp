/*
 *   Copyright 2026 The rtk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtk {

/// Every failure raised by the engine carries one of these kinds, so callers
/// (and the command line front end) can dispatch without parsing messages.
enum class ErrorKind {
  EmptySpecification,
  UnknownState,
  DuplicateState,
  TooManyStates,
  Incompatible,
  SpaceMismatch,
  NotEndomorphism,
  CapExceeded,
  NotLumping,
  NotPartitionLumping,
  NotOrderEmbedding,
  NotDecomposable,
  NotIntensive,
  LumpingOrderViolated,
  NotSubmonoid,
  NotInMonoid,
  NotComplete,
  NotIndependent,
  NotSubtheory,
  NotIsomorphism,
  NotInJoin,
  IncompatibleSideResource,
  EmptyIntersection,
  IncompatibleW,
  InternalInconsistency,
  UnknownIndex,
  BadIndex,
  NoChainsDeclared,
  BadProbability,
  DimMismatch,
  LengthMismatch,
  UndefinedPoint,
  TooLarge,
  ParseError,
  DuplicateName,
  UnknownReference,
  Usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised by the theory-file parser; position is 1-based.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace rtk
