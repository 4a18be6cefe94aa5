// Copyright 2026 The posdep Authors. All Rights Reserved.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posdep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or theory text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive enumeration was asked to range over more atoms than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t count, const std::string& what)
      : Error(what + " over " + std::to_string(count) +
              " atoms exceeds the cap of " + std::to_string(cap)),
        cap_(cap),
        count_(count) {}

  std::size_t cap() const { return cap_; }
  std::size_t count() const { return count_; }

 private:
  std::size_t cap_;
  std::size_t count_;
};

/// A theory member is not of the form Body -> atom (or a bare atom).
class NotNondisjunctive : public Error {
 public:
  NotNondisjunctive(std::size_t index, const std::string& formula_text)
      : Error("theory member " + std::to_string(index + 1) +
              " is not a nondisjunctive rule: " + formula_text),
        index_(index) {}

  /// 0-based position of the offending member.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Arguments violate an operation's precondition (atom sets outside a
/// formula, an empty loop, a non-partition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace posdep
