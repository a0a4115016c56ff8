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
#include <string>

namespace revft
{

enum class CostNotation
{
  greek, ///< 8α+6β+2δ
  ascii  ///< 8a+6b+2d
};

/// Total logical calculation: two-input XORs (alpha), two-input ANDs (beta)
/// and NOTs (delta).
struct CostVector
{
  std::uint64_t alpha{ 0 };
  std::uint64_t beta{ 0 };
  std::uint64_t delta{ 0 };

  CostVector& operator+=( const CostVector& other ) noexcept
  {
    alpha += other.alpha;
    beta += other.beta;
    delta += other.delta;
    return *this;
  }

  friend CostVector operator+( CostVector lhs, const CostVector& rhs ) noexcept { return lhs += rhs; }
  friend CostVector operator*( std::uint64_t k, const CostVector& v ) noexcept
  {
    return { k * v.alpha, k * v.beta, k * v.delta };
  }
  friend bool operator==( const CostVector&, const CostVector& ) = default;

  std::string to_string( CostNotation notation = CostNotation::greek ) const;
};

} // namespace revft
