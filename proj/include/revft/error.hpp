/*
 * Copyright 2026 The revft Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revft
{

enum class ErrorCode
{
  invalid_argument,
  unknown_name,
  not_reversible,
  invalid_circuit,
  parse_error,
  too_large,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error
{
public:
  Error( ErrorCode code, const std::string& message )
      : std::runtime_error( message ), code_( code )
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Diagnostic from one of the text readers; line and column are 1-based.
class ParseError : public Error
{
public:
  ParseError( std::size_t line, std::size_t column, const std::string& message )
      : Error( ErrorCode::parse_error, "line " + std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
        line_( line ), column_( column ), detail_( message )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

} // namespace revft
