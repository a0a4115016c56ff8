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

#include "revft/bit_vector.hpp"
#include "revft/error.hpp"

namespace revft
{

BitVector::BitVector( std::initializer_list<int> bits )
{
  bits_.reserve( bits.size() );
  for ( int b : bits )
  {
    if ( b != 0 && b != 1 )
    {
      throw Error( ErrorCode::invalid_argument, "bit value must be 0 or 1" );
    }
    bits_.push_back( static_cast<std::uint8_t>( b ) );
  }
}

BitVector::BitVector( std::vector<std::uint8_t> bits ) : bits_( std::move( bits ) )
{
  for ( auto b : bits_ )
  {
    if ( b > 1 )
    {
      throw Error( ErrorCode::invalid_argument, "bit value must be 0 or 1" );
    }
  }
}

BitVector BitVector::from_index( std::uint64_t index, std::size_t width )
{
  std::vector<std::uint8_t> bits( width );
  for ( std::size_t i = 0; i < width; ++i )
  {
    bits[width - 1 - i] = static_cast<std::uint8_t>( ( index >> i ) & 1u );
  }
  return BitVector( std::move( bits ) );
}

BitVector BitVector::from_string( std::string_view text )
{
  std::vector<std::uint8_t> bits;
  bits.reserve( text.size() );
  for ( char ch : text )
  {
    if ( ch != '0' && ch != '1' )
    {
      throw Error( ErrorCode::invalid_argument, "invalid bit string '" + std::string( text ) + "'" );
    }
    bits.push_back( static_cast<std::uint8_t>( ch - '0' ) );
  }
  return BitVector( std::move( bits ) );
}

std::uint64_t BitVector::to_index() const
{
  if ( bits_.size() > 64 )
  {
    throw Error( ErrorCode::too_large, "bit vector wider than 64 bits" );
  }
  std::uint64_t index = 0;
  for ( auto b : bits_ )
  {
    index = ( index << 1 ) | b;
  }
  return index;
}

std::string BitVector::to_string() const
{
  std::string out;
  out.reserve( bits_.size() );
  for ( auto b : bits_ )
  {
    out.push_back( static_cast<char>( '0' + b ) );
  }
  return out;
}

bool BitVector::parity() const noexcept
{
  std::uint8_t p = 0;
  for ( auto b : bits_ )
  {
    p ^= b;
  }
  return p != 0;
}

} // namespace revft
