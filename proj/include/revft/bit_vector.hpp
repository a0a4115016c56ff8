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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace revft
{

/// Ordered bits, first element is the first-listed port and the most
/// significant bit of the pattern index.
class BitVector
{
public:
  BitVector() = default;
  BitVector( std::initializer_list<int> bits );
  explicit BitVector( std::vector<std::uint8_t> bits );

  static BitVector from_index( std::uint64_t index, std::size_t width );
  static BitVector from_string( std::string_view text );

  std::size_t width() const noexcept { return bits_.size(); }
  bool operator[]( std::size_t i ) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::uint64_t to_index() const;
  std::string to_string() const;
  bool parity() const noexcept;

  friend bool operator==( const BitVector&, const BitVector& ) = default;

private:
  std::vector<std::uint8_t> bits_;
};

inline bool parity_of( std::uint64_t pattern ) noexcept
{
  return ( __builtin_popcountll( pattern ) & 1 ) != 0;
}

} // namespace revft
