// Copyright 2026 The swogr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace swogr {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedCode : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class CatalogParseError : public Error {
 public:
  CatalogParseError(std::size_t line, const std::string& what)
      : Error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateCode : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class UnsupportedTemplate : public Error {
 public:
  using Error::Error;
};

// Errors carrying a source position; line and column are 1-based.
class PositionedError : public Error {
 public:
  PositionedError(const std::string& kind, std::size_t line, std::size_t column,
                  const std::string& what)
      : Error(kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SwmlParseError : public PositionedError {
 public:
  SwmlParseError(std::size_t line, std::size_t column, const std::string& what)
      : PositionedError("swml parse error", line, column, what) {}
};

class SchemaViolation : public PositionedError {
 public:
  SchemaViolation(std::size_t line, std::size_t column, const std::string& what)
      : PositionedError("swml schema violation", line, column, what) {}
};

class DegenerateComponent : public Error {
 public:
  using Error::Error;
};

class InvalidCascade : public Error {
 public:
  using Error::Error;
};

class EmptyInk : public Error {
 public:
  EmptyInk() : Error("stroke set contains no ink") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ImageError : public Error {
 public:
  using Error::Error;
};

// Output could not be written (disk full, missing directory, permissions).
class WriteError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace swogr
